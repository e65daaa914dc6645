#pragma once

// Cut cellular surfaces as combinatorial data.
//
// A surface is a set of vertices, oriented edges and faces. Each face stores
// its boundary as a cyclic word of oriented edge references read
// anticlockwise, together with a basepoint: the word position whose starting
// vertex is the basepoint. Cut edges are stored once, even though they appear
// twice on the perimeter of the planar region.
//
// Boundary circles consist of one vertex and one loop edge. In-boundaries lie
// along the bottom of the planar region and are read forwards; out-boundaries
// lie along the top and are read backwards, since all boundary edges point
// left to right.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccs/error.hpp"

namespace ccs {

enum class EdgeKind { in_boundary, out_boundary, cut, internal };

constexpr std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::in_boundary: return "in";
    case EdgeKind::out_boundary: return "out";
    case EdgeKind::cut: return "cut";
    case EdgeKind::internal: return "internal";
  }
  return "?";
}

struct Edge {
  EdgeKind kind = EdgeKind::internal;
  std::size_t slot = 0;  // boundary edges only
  std::size_t tail = 0;
  std::size_t head = 0;

  bool is_boundary() const noexcept {
    return kind == EdgeKind::in_boundary || kind == EdgeKind::out_boundary;
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeRef {
  std::size_t edge = 0;
  bool forward = true;

  EdgeRef reversed() const noexcept { return {edge, !forward}; }
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct Face {
  std::vector<EdgeRef> word;
  std::size_t basepoint = 0;
  friend bool operator==(const Face&, const Face&) = default;
};

struct SurfaceComplex {
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  std::string name;

  std::size_t start_of(const EdgeRef& r) const { return r.forward ? edges[r.edge].tail : edges[r.edge].head; }
  std::size_t end_of(const EdgeRef& r) const { return r.forward ? edges[r.edge].head : edges[r.edge].tail; }

  std::optional<std::size_t> boundary_edge(EdgeKind kind, std::size_t slot) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].kind == kind && edges[i].slot == slot) return i;
    return std::nullopt;
  }

  friend bool operator==(const SurfaceComplex& a, const SurfaceComplex& b) {
    return a.num_vertices == b.num_vertices && a.edges == b.edges && a.faces == b.faces &&
           a.n_in == b.n_in && a.n_out == b.n_out;
  }
};

struct SurfaceReport {
  std::size_t internal_vertices = 0;  // v
  std::size_t internal_edges = 0;     // e
  std::size_t faces = 0;
  std::size_t n_out = 0;  // m
  std::size_t n_in = 0;   // n
  long euler_characteristic = 0;
};

namespace detail {

[[noreturn]] inline void invalid(const std::string& why) { throw Error(Errc::invalid_complex, why); }

inline std::vector<bool> boundary_vertex_mask(const SurfaceComplex& s) {
  std::vector<bool> mask(s.num_vertices, false);
  for (const Edge& e : s.edges)
    if (e.is_boundary()) mask[e.tail] = true;
  return mask;
}

}  // namespace detail

/// Checks every structural invariant and returns the cell counts.
inline SurfaceReport validate(const SurfaceComplex& s) {
  using detail::invalid;
  if (s.faces.empty()) invalid("no faces");
  std::vector<std::size_t> in_slots(s.n_in, 0), out_slots(s.n_out, 0);
  std::vector<std::size_t> incidence(s.num_vertices, 0);
  std::vector<bool> boundary_vertex(s.num_vertices, false);
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const Edge& e = s.edges[i];
    if (e.tail >= s.num_vertices || e.head >= s.num_vertices) {
      invalid("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    ++incidence[e.tail];
    ++incidence[e.head];
    if (!e.is_boundary()) continue;
    auto& slots = e.kind == EdgeKind::in_boundary ? in_slots : out_slots;
    if (e.slot >= slots.size()) invalid("boundary edge " + std::to_string(i) + " has slot out of range");
    if (slots[e.slot]++) invalid("boundary slot " + std::to_string(e.slot) + " used twice");
    if (e.tail != e.head) invalid("boundary edge " + std::to_string(i) + " is not a loop");
    if (boundary_vertex[e.tail]) invalid("two boundary circles share vertex " + std::to_string(e.tail));
    boundary_vertex[e.tail] = true;
  }
  for (std::size_t k = 0; k < in_slots.size(); ++k)
    if (!in_slots[k]) invalid("in-slot " + std::to_string(k) + " unused");
  for (std::size_t k = 0; k < out_slots.size(); ++k)
    if (!out_slots[k]) invalid("out-slot " + std::to_string(k) + " unused");
  for (std::size_t v = 0; v < s.num_vertices; ++v)
    if (!incidence[v]) invalid("vertex " + std::to_string(v) + " is isolated");

  std::vector<std::size_t> forward_uses(s.edges.size(), 0), reverse_uses(s.edges.size(), 0);
  std::vector<std::vector<std::size_t>> faces_of_edge(s.edges.size());
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const Face& face = s.faces[f];
    if (face.word.empty()) invalid("face " + std::to_string(f) + " has an empty word");
    if (face.basepoint >= face.word.size()) invalid("face " + std::to_string(f) + " basepoint out of range");
    for (std::size_t i = 0; i < face.word.size(); ++i) {
      const EdgeRef& r = face.word[i];
      if (r.edge >= s.edges.size()) invalid("face " + std::to_string(f) + " references a missing edge");
      (r.forward ? forward_uses : reverse_uses)[r.edge]++;
      faces_of_edge[r.edge].push_back(f);
    }
    for (std::size_t i = 0; i < face.word.size(); ++i) {
      const EdgeRef& r = face.word[i];
      const EdgeRef& next = face.word[(i + 1) % face.word.size()];
      if (s.end_of(r) != s.start_of(next)) {
        invalid("face " + std::to_string(f) + " word breaks at position " + std::to_string(i));
      }
    }
  }
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const Edge& e = s.edges[i];
    const std::string id = std::to_string(i);
    switch (e.kind) {
      case EdgeKind::in_boundary:
        if (forward_uses[i] != 1 || reverse_uses[i] != 0) invalid("in-boundary edge " + id + " must be read once forwards");
        break;
      case EdgeKind::out_boundary:
        if (forward_uses[i] != 0 || reverse_uses[i] != 1) invalid("out-boundary edge " + id + " must be read once backwards");
        break;
      case EdgeKind::cut:
      case EdgeKind::internal:
        if (forward_uses[i] != 1 || reverse_uses[i] != 1) invalid("edge " + id + " must be read once in each direction");
        break;
    }
  }

  // the face adjacency graph must be connected
  std::vector<bool> reached(s.faces.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    std::size_t f = stack.back();
    stack.pop_back();
    for (const EdgeRef& r : s.faces[f].word)
      for (std::size_t g : faces_of_edge[r.edge])
        if (!reached[g]) {
          reached[g] = true;
          stack.push_back(g);
        }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) invalid("surface is disconnected");

  SurfaceReport report;
  report.n_in = s.n_in;
  report.n_out = s.n_out;
  report.faces = s.faces.size();
  report.internal_vertices = static_cast<std::size_t>(std::count(boundary_vertex.begin(), boundary_vertex.end(), false));
  report.internal_edges = static_cast<std::size_t>(
      std::count_if(s.edges.begin(), s.edges.end(), [](const Edge& e) { return !e.is_boundary(); }));
  report.euler_characteristic = static_cast<long>(s.num_vertices) - static_cast<long>(s.edges.size()) +
                                static_cast<long>(s.faces.size());
  return report;
}

// ---------------------------------------------------------------------------
// Catalogue. Vertex 0 is the bottom vertex and the word starts there.

/// One face a a^-1 around a cut edge joining two vertices.
inline SurfaceComplex make_sphere() {
  SurfaceComplex s;
  s.name = "sphere";
  s.num_vertices = 2;
  s.edges = {{EdgeKind::cut, 0, 0, 1}};
  s.faces = {{{{0, true}, {0, false}}, 0}};
  return s;
}

/// Word g k k^-1 with g the in-boundary.
inline SurfaceComplex make_disk_in() {
  SurfaceComplex s;
  s.name = "disk_in";
  s.num_vertices = 2;
  s.n_in = 1;
  s.edges = {{EdgeKind::in_boundary, 0, 0, 0}, {EdgeKind::cut, 0, 0, 1}};
  s.faces = {{{{0, true}, {1, true}, {1, false}}, 0}};
  return s;
}

/// Word k g^-1 k^-1 with g the out-boundary at the top.
inline SurfaceComplex make_disk_out() {
  SurfaceComplex s;
  s.name = "disk_out";
  s.num_vertices = 2;
  s.n_out = 1;
  s.edges = {{EdgeKind::cut, 0, 0, 1}, {EdgeKind::out_boundary, 0, 1, 1}};
  s.faces = {{{{0, true}, {1, false}, {0, false}}, 0}};
  return s;
}

/// Word g1 k g2^-1 k^-1.
inline SurfaceComplex make_cylinder() {
  SurfaceComplex s;
  s.name = "cylinder";
  s.num_vertices = 2;
  s.n_in = 1;
  s.n_out = 1;
  s.edges = {{EdgeKind::in_boundary, 0, 0, 0}, {EdgeKind::cut, 0, 0, 1}, {EdgeKind::out_boundary, 0, 1, 1}};
  s.faces = {{{{0, true}, {1, true}, {2, false}, {1, false}}, 0}};
  return s;
}

/// Word j1 j2 j1^-1 j2^-1 with a single vertex.
inline SurfaceComplex make_torus() {
  SurfaceComplex s;
  s.name = "torus";
  s.num_vertices = 1;
  s.edges = {{EdgeKind::cut, 0, 0, 0}, {EdgeKind::cut, 0, 0, 0}};
  s.faces = {{{{0, true}, {1, true}, {0, false}, {1, false}}, 0}};
  return s;
}

enum class SurfaceKind { sphere, disk_in, disk_out, cylinder, torus };

inline std::vector<SurfaceKind> all_surface_kinds() {
  return {SurfaceKind::sphere, SurfaceKind::disk_in, SurfaceKind::disk_out, SurfaceKind::cylinder,
          SurfaceKind::torus};
}

constexpr std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::sphere: return "sphere";
    case SurfaceKind::disk_in: return "disk_in";
    case SurfaceKind::disk_out: return "disk_out";
    case SurfaceKind::cylinder: return "cylinder";
    case SurfaceKind::torus: return "torus";
  }
  return "?";
}

inline SurfaceKind surface_kind_from_string(std::string_view name) {
  for (SurfaceKind k : all_surface_kinds())
    if (to_string(k) == name) return k;
  throw Error(Errc::unknown_kind, "unknown surface kind '" + std::string(name) + "'");
}

inline SurfaceComplex make_surface(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::sphere: return make_sphere();
    case SurfaceKind::disk_in: return make_disk_in();
    case SurfaceKind::disk_out: return make_disk_out();
    case SurfaceKind::cylinder: return make_cylinder();
    case SurfaceKind::torus: return make_torus();
  }
  throw Error(Errc::unknown_kind, "unknown surface kind");
}

// ---------------------------------------------------------------------------
// Edits that keep ids dense.

namespace detail {

inline void erase_edge(SurfaceComplex& s, std::size_t victim) {
  s.edges.erase(s.edges.begin() + static_cast<std::ptrdiff_t>(victim));
  for (Face& f : s.faces)
    for (EdgeRef& r : f.word)
      if (r.edge > victim) --r.edge;
}

inline void erase_vertex(SurfaceComplex& s, std::size_t victim) {
  for (Edge& e : s.edges) {
    if (e.tail > victim) --e.tail;
    if (e.head > victim) --e.head;
  }
  --s.num_vertices;
}

inline std::size_t vertex_at(const SurfaceComplex& s, const Face& f, std::size_t pos) {
  return s.start_of(f.word[pos]);
}

}  // namespace detail

/// Reverses a non-boundary edge and every reference to it.
inline SurfaceComplex flip_edge(const SurfaceComplex& s, std::size_t edge) {
  if (edge >= s.edges.size() || s.edges[edge].is_boundary()) {
    throw Error(Errc::not_internal, "only non-boundary edges can be reoriented");
  }
  SurfaceComplex out = s;
  std::swap(out.edges[edge].tail, out.edges[edge].head);
  for (Face& f : out.faces)
    for (EdgeRef& r : f.word)
      if (r.edge == edge) r.forward = !r.forward;
  return out;
}

inline SurfaceComplex with_basepoint(const SurfaceComplex& s, std::size_t face, std::size_t position) {
  if (face >= s.faces.size() || position >= s.faces[face].word.size()) {
    throw Error(Errc::invalid_complex, "basepoint position out of range");
  }
  SurfaceComplex out = s;
  out.faces[face].basepoint = position;
  return out;
}

/// Move I: puts a new vertex in the middle of a non-boundary edge. The first
/// half keeps the edge id, the second half is appended; the new vertex is
/// appended too.
inline SurfaceComplex move_i_split(const SurfaceComplex& s, std::size_t edge) {
  if (edge >= s.edges.size() || s.edges[edge].is_boundary()) {
    throw Error(Errc::not_internal, "Move I needs a non-boundary edge");
  }
  SurfaceComplex out = s;
  const std::size_t mid = out.num_vertices++;
  const std::size_t second = out.edges.size();
  Edge tail_half = s.edges[edge];
  Edge head_half = s.edges[edge];
  tail_half.head = mid;
  head_half.tail = mid;
  out.edges[edge] = tail_half;
  out.edges.push_back(head_half);
  for (Face& f : out.faces) {
    std::vector<EdgeRef> word;
    std::size_t bp = f.basepoint;
    for (std::size_t i = 0; i < f.word.size(); ++i) {
      const EdgeRef& r = f.word[i];
      if (r.edge != edge) {
        word.push_back(r);
        continue;
      }
      if (i < f.basepoint) ++bp;
      if (r.forward) {
        word.push_back({edge, true});
        word.push_back({second, true});
      } else {
        word.push_back({second, false});
        word.push_back({edge, false});
      }
    }
    f.word = std::move(word);
    f.basepoint = bp;
  }
  return out;
}

/// Move I inverse: removes an internal vertex where exactly two distinct
/// edges meet and fuses them into one.
inline SurfaceComplex move_i_merge(const SurfaceComplex& s, std::size_t vertex) {
  if (vertex >= s.num_vertices || detail::boundary_vertex_mask(s)[vertex]) {
    throw Error(Errc::not_internal, "Move I merge needs an internal vertex");
  }
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    if (s.edges[i].tail == vertex) ends.push_back(i);
    if (s.edges[i].head == vertex) ends.push_back(i);
  }
  if (ends.size() != 2) throw Error(Errc::not_mergeable, "vertex does not have degree 2");
  if (ends[0] == ends[1]) throw Error(Errc::not_mergeable, "vertex carries a single loop");

  // x points into the vertex, y points out of it; the fused edge is x y.
  const std::size_t xe = std::min(ends[0], ends[1]);
  const std::size_t ye = std::max(ends[0], ends[1]);
  const EdgeRef x{xe, s.edges[xe].head == vertex};
  const EdgeRef y{ye, s.edges[ye].tail == vertex};

  SurfaceComplex out = s;
  Edge fused = s.edges[xe];
  fused.tail = s.start_of(x);
  fused.head = s.end_of(y);
  if (s.edges[xe].kind == EdgeKind::cut || s.edges[ye].kind == EdgeKind::cut) fused.kind = EdgeKind::cut;
  out.edges[xe] = fused;

  for (Face& f : out.faces) {
    const std::size_t k = f.word.size();
    auto pairs_at = [&](std::size_t i) {
      const EdgeRef& a = f.word[i];
      const EdgeRef& b = f.word[(i + 1) % k];
      return (a == x && b == y) || (a == y.reversed() && b == x.reversed());
    };
    std::vector<EdgeRef> word = f.word;
    std::size_t bp = f.basepoint;
    if (k >= 2 && pairs_at(k - 1)) {
      std::rotate(word.begin(), word.end() - 1, word.end());
      bp = (bp + 1) % k;
    }
    std::vector<EdgeRef> merged;
    std::size_t new_bp = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const EdgeRef& a = word[i];
      if (a.edge != xe && a.edge != ye) {
        if (i == bp) new_bp = merged.size();
        merged.push_back(a);
        continue;
      }
      const bool pair = i + 1 < k && ((a == x && word[i + 1] == y) ||
                                      (a == y.reversed() && word[i + 1] == x.reversed()));
      if (!pair) throw Error(Errc::not_mergeable, "edges do not pass straight through the vertex");
      if (i == bp || i + 1 == bp) new_bp = merged.size();
      merged.push_back({xe, a == x});
      ++i;
    }
    f.word = std::move(merged);
    f.basepoint = new_bp;
  }
  detail::erase_edge(out, ye);
  detail::erase_vertex(out, vertex);
  return out;
}

/// Move II: splits a face by a new internal edge between two word positions.
///
/// The new edge is appended and oriented so that the face containing the old
/// basepoint reads it forwards; that face keeps the face id and the basepoint,
/// the other face is appended with basepoint 0.
inline SurfaceComplex move_ii_split(const SurfaceComplex& s, std::size_t face, std::size_t pos_a,
                                    std::size_t pos_b) {
  if (face >= s.faces.size()) throw Error(Errc::invalid_complex, "face out of range");
  const Face& f = s.faces[face];
  const std::size_t k = f.word.size();
  if (pos_a >= k || pos_b >= k) throw Error(Errc::invalid_complex, "position out of range");
  if (pos_a == pos_b) throw Error(Errc::same_position, "Move II needs two distinct positions");

  auto cyc = [k](std::size_t from, std::size_t to) { return (to + k - from) % k; };
  // the forward face covers positions [t, s] cyclically
  std::size_t src = pos_a, dst = pos_b;
  if (cyc(dst, f.basepoint) > cyc(dst, src)) std::swap(src, dst);

  SurfaceComplex out = s;
  const std::size_t edge = out.edges.size();
  out.edges.push_back({EdgeKind::internal, 0, detail::vertex_at(s, f, src), detail::vertex_at(s, f, dst)});

  Face fwd, other;
  fwd.word.push_back({edge, true});
  for (std::size_t i = dst; i != src; i = (i + 1) % k) fwd.word.push_back(f.word[i]);
  fwd.basepoint = f.basepoint == src ? 0 : 1 + cyc(dst, f.basepoint);
  for (std::size_t i = src; i != dst; i = (i + 1) % k) other.word.push_back(f.word[i]);
  other.word.push_back({edge, false});
  other.basepoint = 0;

  out.faces[face] = std::move(fwd);
  out.faces.push_back(std::move(other));
  return out;
}

/// Move II inverse: deletes an internal edge between two distinct faces. The
/// merged face takes the id and basepoint of the face that reads the edge
/// forwards.
inline SurfaceComplex move_ii_merge(const SurfaceComplex& s, std::size_t edge) {
  if (edge >= s.edges.size() || s.edges[edge].kind != EdgeKind::internal) {
    throw Error(Errc::not_internal, "Move II merge needs an internal edge");
  }
  std::optional<std::pair<std::size_t, std::size_t>> fwd, rev;
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    for (std::size_t i = 0; i < s.faces[f].word.size(); ++i)
      if (s.faces[f].word[i].edge == edge) (s.faces[f].word[i].forward ? fwd : rev) = std::pair{f, i};
  if (!fwd || !rev) throw Error(Errc::invalid_complex, "edge is not used twice");
  if (fwd->first == rev->first) throw Error(Errc::not_separating, "edge borders the same face on both sides");

  const Face& a = s.faces[fwd->first];
  const Face& b = s.faces[rev->first];
  const std::size_t ka = a.word.size(), kb = b.word.size();
  Face merged;
  for (std::size_t j = 1; j < ka; ++j) merged.word.push_back(a.word[(fwd->second + j) % ka]);
  for (std::size_t j = 1; j < kb; ++j) merged.word.push_back(b.word[(rev->second + j) % kb]);
  if (merged.word.empty()) throw Error(Errc::not_mergeable, "merged face would be empty");
  merged.basepoint = (a.basepoint + ka - fwd->second - 1) % ka;
  if (merged.basepoint >= merged.word.size()) merged.basepoint = 0;

  SurfaceComplex out = s;
  out.faces[fwd->first] = std::move(merged);
  out.faces.erase(out.faces.begin() + static_cast<std::ptrdiff_t>(rev->first));

  std::vector<bool> used(out.num_vertices, false);
  for (std::size_t i = 0; i < out.edges.size(); ++i) {
    if (i == edge) continue;
    used[out.edges[i].tail] = used[out.edges[i].head] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw Error(Errc::not_mergeable, "removing the edge would isolate a vertex");
  }
  detail::erase_edge(out, edge);
  return out;
}

/// M2 o M1: out-slot k of M1 is identified with in-slot k of M2. Slot 0
/// becomes an internal edge, the rest become cut edges.
inline SurfaceComplex glue(const SurfaceComplex& m1, const SurfaceComplex& m2) {
  if (m1.n_out != m2.n_in || m1.n_out == 0) {
    throw Error(Errc::boundary_mismatch, "cannot glue " + std::to_string(m1.n_out) + " out-boundaries to " +
                                              std::to_string(m2.n_in) + " in-boundaries");
  }
  SurfaceComplex out = m1;
  out.name = m2.name + "∘" + m1.name;
  const std::size_t voff = m1.num_vertices, eoff = m1.edges.size();
  out.num_vertices += m2.num_vertices;
  for (Edge e : m2.edges) {
    e.tail += voff;
    e.head += voff;
    out.edges.push_back(e);
  }
  for (Face f : m2.faces) {
    for (EdgeRef& r : f.word) r.edge += eoff;
    out.faces.push_back(std::move(f));
  }
  out.n_out = m2.n_out;

  // the in-edges of m2 and their vertices are dropped, highest id first
  std::vector<std::pair<std::size_t, std::size_t>> drop;
  for (std::size_t k = 0; k < m1.n_out; ++k) {
    const std::size_t e1 = *m1.boundary_edge(EdgeKind::out_boundary, k);
    const std::size_t e2 = *m2.boundary_edge(EdgeKind::in_boundary, k) + eoff;
    const std::size_t v1 = out.edges[e1].tail, v2 = out.edges[e2].tail;
    out.edges[e1].kind = k == 0 ? EdgeKind::internal : EdgeKind::cut;
    out.edges[e1].slot = 0;
    for (Edge& e : out.edges) {
      if (e.tail == v2) e.tail = v1;
      if (e.head == v2) e.head = v1;
    }
    for (Face& f : out.faces)
      for (EdgeRef& r : f.word)
        if (r.edge == e2) r.edge = e1;
    drop.emplace_back(e2, v2);
  }
  std::sort(drop.begin(), drop.end(), [](auto& a, auto& b) { return a.first > b.first; });
  for (auto [e, v] : drop) detail::erase_edge(out, e);
  std::sort(drop.begin(), drop.end(), [](auto& a, auto& b) { return a.second > b.second; });
  for (auto [e, v] : drop) detail::erase_vertex(out, v);
  return out;
}

/// Deterministic relabelling-invariant description.
///
/// Faces are visited breadth first from a seed face, each face word is read
/// from its basepoint, and vertices, edges and faces are numbered in order of
/// first encounter. The result is the lexicographically least description
/// over all seed faces. Two complexes are equal up to relabelling exactly
/// when their canonical forms are equal.
inline std::string canonical_form(const SurfaceComplex& s) {
  std::string best;
  for (std::size_t seed = 0; seed < s.faces.size(); ++seed) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> vlabel(s.num_vertices, kNone), elabel(s.edges.size(), kNone),
        flabel(s.faces.size(), kNone);
    std::size_t nv = 0, ne = 0, nf = 0;
    std::queue<std::size_t> pending;
    pending.push(seed);
    flabel[seed] = nf++;
    std::ostringstream os;
    std::vector<std::size_t> edge_order;
    while (!pending.empty()) {
      const std::size_t f = pending.front();
      pending.pop();
      const Face& face = s.faces[f];
      os << 'F';
      for (std::size_t j = 0; j < face.word.size(); ++j) {
        const EdgeRef& r = face.word[(face.basepoint + j) % face.word.size()];
        if (elabel[r.edge] == kNone) {
          elabel[r.edge] = ne++;
          edge_order.push_back(r.edge);
        }
        const std::size_t v = s.start_of(r);
        if (vlabel[v] == kNone) vlabel[v] = nv++;
        os << (r.forward ? '+' : '-') << elabel[r.edge] << '@' << vlabel[v] << ' ';
        for (std::size_t g = 0; g < s.faces.size(); ++g) {
          if (flabel[g] != kNone) continue;
          for (const EdgeRef& q : s.faces[g].word)
            if (q.edge == r.edge) {
              flabel[g] = nf++;
              pending.push(g);
              break;
            }
        }
      }
    }
    os << "|E";
    for (std::size_t e : edge_order) {
      const Edge& edge = s.edges[e];
      os << ' ' << to_string(edge.kind);
      if (edge.is_boundary()) os << edge.slot;
    }
    os << "|V" << s.num_vertices << "|io" << s.n_in << ',' << s.n_out;
    std::string candidate = os.str();
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

inline bool equal_up_to_relabeling(const SurfaceComplex& a, const SurfaceComplex& b) {
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Random move sequences.

enum class MoveType { i_split, i_merge, ii_split, ii_merge };

struct Move {
  MoveType type;
  std::size_t a = 0;  // edge, vertex or face
  std::size_t b = 0;  // Move II split positions
  std::size_t c = 0;
};

inline SurfaceComplex apply_move(const SurfaceComplex& s, const Move& m) {
  switch (m.type) {
    case MoveType::i_split: return move_i_split(s, m.a);
    case MoveType::i_merge: return move_i_merge(s, m.a);
    case MoveType::ii_split: return move_ii_split(s, m.a, m.b, m.c);
    case MoveType::ii_merge: return move_ii_merge(s, m.a);
  }
  throw Error(Errc::unknown_kind, "unknown move");
}

/// Every move applicable to `s`. Splits are bounded by `max_edges`.
inline std::vector<Move> applicable_moves(const SurfaceComplex& s, std::size_t max_edges = 16) {
  std::vector<Move> moves;
  const bool may_grow = s.edges.size() < max_edges;
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e].is_boundary()) continue;
    if (may_grow) moves.push_back({MoveType::i_split, e});
    if (s.edges[e].kind == EdgeKind::internal) {
      try {
        (void)move_ii_merge(s, e);
        moves.push_back({MoveType::ii_merge, e});
      } catch (const Error&) {
      }
    }
  }
  for (std::size_t v = 0; v < s.num_vertices; ++v) {
    try {
      (void)move_i_merge(s, v);
      moves.push_back({MoveType::i_merge, v});
    } catch (const Error&) {
    }
  }
  if (may_grow)
    for (std::size_t f = 0; f < s.faces.size(); ++f)
      for (std::size_t p = 0; p < s.faces[f].word.size(); ++p)
        for (std::size_t q = p + 1; q < s.faces[f].word.size(); ++q) moves.push_back({MoveType::ii_split, f, p, q});
  return moves;
}

template <class Rng>
SurfaceComplex random_move_sequence(const SurfaceComplex& s, std::size_t depth, Rng& rng,
                                    std::size_t max_edges = 16) {
  SurfaceComplex cur = s;
  for (std::size_t step = 0; step < depth; ++step) {
    auto moves = applicable_moves(cur, max_edges);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    cur = apply_move(cur, moves[pick(rng)]);
  }
  return cur;
}

}  // namespace ccs
