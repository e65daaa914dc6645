#pragma once

// Fake-flat colourings and the invariant they define.
//
// A colouring assigns a G-element to every edge and an H-element to every
// face such that, for each face, the product of its word read from the
// basepoint equals d(h_face). Boundary edges take externally supplied
// colours; in-slot k gets g_in[k] and out-slot k gets g_out[k].
//
// Two counting paths are provided:
//   oracle  walks all |G|^e |H|^f assignments and tests each face directly.
//   fast    walks the |G|^e edge assignments only. A face whose word product
//           lies in im d admits exactly |K| face colours, and none otherwise,
//           so the count is (#edge assignments with every product in A) * |K|^f.
// The fast walk is depth first in edge-id order (first edge most significant)
// and tests a face as soon as its last edge is assigned.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "ccs/crossed_module.hpp"
#include "ccs/exact.hpp"
#include "ccs/surface.hpp"
#include "ccs/two_group.hpp"

namespace ccs {

enum class CountMode { oracle, fast, both };

inline constexpr std::uint64_t kDefaultMaxFastStates = 100'000'000;
inline constexpr std::uint64_t kDefaultMaxOracleStates = 10'000'000;

struct EngineOptions {
  CountMode mode = CountMode::fast;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
  std::uint64_t max_fast_states = kDefaultMaxFastStates;
  std::uint64_t max_oracle_states = kDefaultMaxOracleStates;

  /// Defaults overridden by CCS_MAX_FAST_STATES / CCS_MAX_ORACLE_STATES.
  static EngineOptions from_environment() {
    EngineOptions opts;
    if (const char* v = std::getenv("CCS_MAX_FAST_STATES")) opts.max_fast_states = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("CCS_MAX_ORACLE_STATES")) opts.max_oracle_states = std::strtoull(v, nullptr, 10);
    return opts;
  }
};

/// G-colours of non-boundary edges and H-colours of faces, keyed by id.
struct Colouring {
  std::map<std::size_t, elem_t> edge_colour;
  std::map<std::size_t, elem_t> face_colour;
};

using Tuple = std::vector<elem_t>;

namespace detail {

/// base^exponent saturating at the uint64 maximum.
inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

inline void check_boundary(const SurfaceComplex& s, const CrossedModule& cm, const Tuple& g_in,
                           const Tuple& g_out) {
  if (g_in.size() != s.n_in || g_out.size() != s.n_out) {
    throw Error(Errc::arity_mismatch, "boundary tuple sizes do not match the surface");
  }
  for (elem_t g : g_in)
    if (g >= cm.g().order()) throw Error(Errc::parse_error, "boundary colour out of range");
  for (elem_t g : g_out)
    if (g >= cm.g().order()) throw Error(Errc::parse_error, "boundary colour out of range");
}

inline elem_t edge_value(const SurfaceComplex& s, std::size_t edge, const std::map<std::size_t, elem_t>& colours,
                         const Tuple& g_in, const Tuple& g_out) {
  const Edge& e = s.edges[edge];
  if (e.kind == EdgeKind::in_boundary) return g_in[e.slot];
  if (e.kind == EdgeKind::out_boundary) return g_out[e.slot];
  auto it = colours.find(edge);
  if (it == colours.end()) throw Error(Errc::missing_colour, "edge " + std::to_string(edge) + " has no colour");
  return it->second;
}

}  // namespace detail

/// Product of a face word read from `start`, with the given edge colours.
inline elem_t word_product(const SurfaceComplex& s, const CrossedModule& cm, std::size_t face, std::size_t start,
                           std::size_t length, const Colouring& col, const Tuple& g_in, const Tuple& g_out) {
  const FiniteGroup& G = cm.g();
  const Face& f = s.faces[face];
  elem_t p = 0;
  for (std::size_t j = 0; j < length; ++j) {
    const EdgeRef& r = f.word[(start + j) % f.word.size()];
    elem_t x = detail::edge_value(s, r.edge, col.edge_colour, g_in, g_out);
    p = G.mul(p, r.forward ? x : G.inv(x));
  }
  return p;
}

/// True iff every face satisfies fake flatness.
inline bool check_fake_flat(const SurfaceComplex& s, const CrossedModule& cm, const Colouring& col,
                            const Tuple& g_in, const Tuple& g_out) {
  detail::check_boundary(s, cm, g_in, g_out);
  bool flat = true;
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    auto it = col.face_colour.find(f);
    if (it == col.face_colour.end()) throw Error(Errc::missing_colour, "face " + std::to_string(f) + " has no colour");
    const elem_t p = word_product(s, cm, f, s.faces[f].basepoint, s.faces[f].word.size(), col, g_in, g_out);
    if (p != cm.d(it->second)) flat = false;
  }
  return flat;
}

/// Surface and module compiled for repeated counting.
class ColouringCounter {
 public:
  ColouringCounter(SurfaceComplex surface, CrossedModule cm, EngineOptions options = {})
      : s_(std::move(surface)), cm_(std::move(cm)), opts_(options) {
    report_ = validate(s_);
    for (std::size_t e = 0; e < s_.edges.size(); ++e)
      if (!s_.edges[e].is_boundary()) var_edges_.push_back(e);
    slot_of_edge_.resize(s_.edges.size());
    for (std::size_t i = 0; i < var_edges_.size(); ++i) slot_of_edge_[var_edges_[i]] = i;
    for (std::size_t e = 0; e < s_.edges.size(); ++e) {
      const Edge& edge = s_.edges[e];
      if (edge.kind == EdgeKind::in_boundary) slot_of_edge_[e] = var_edges_.size() + edge.slot;
      if (edge.kind == EdgeKind::out_boundary) slot_of_edge_[e] = var_edges_.size() + s_.n_in + edge.slot;
    }
    const std::size_t nvars = var_edges_.size();
    faces_at_var_.resize(nvars + 1);  // index nvars: faces with only boundary edges
    for (std::size_t f = 0; f < s_.faces.size(); ++f) {
      const Face& face = s_.faces[f];
      CompiledFace cf;
      std::size_t last = nvars;
      bool any_var = false;
      for (std::size_t j = 0; j < face.word.size(); ++j) {
        const EdgeRef& r = face.word[(face.basepoint + j) % face.word.size()];
        const std::size_t slot = slot_of_edge_[r.edge];
        cf.factors.push_back({static_cast<std::uint32_t>(slot), !r.forward});
        if (slot < nvars) {
          last = any_var ? std::max(last, slot) : slot;
          any_var = true;
        }
      }
      faces_at_var_[any_var ? last : nvars].push_back(compiled_.size());
      compiled_.push_back(std::move(cf));
    }
  }

  const SurfaceComplex& surface() const noexcept { return s_; }
  const CrossedModule& module() const noexcept { return cm_; }
  const SurfaceReport& report() const noexcept { return report_; }
  const EngineOptions& options() const noexcept { return opts_; }

  /// #Col(g_in; g_out).
  BigInt count(const Tuple& g_in, const Tuple& g_out) const {
    return count(g_in, g_out, opts_.mode);
  }

  BigInt count(const Tuple& g_in, const Tuple& g_out, CountMode mode) const {
    detail::check_boundary(s_, cm_, g_in, g_out);
    switch (mode) {
      case CountMode::fast: return count_fast(g_in, g_out);
      case CountMode::oracle: return count_oracle(g_in, g_out);
      case CountMode::both: {
        BigInt fast = count_fast(g_in, g_out);
        BigInt oracle = count_oracle(g_in, g_out);
        if (fast != oracle) {
          throw Error(Errc::oracle_mismatch, "fast count " + fast.str() + " != oracle count " + oracle.str());
        }
        return fast;
      }
    }
    throw Error(Errc::unknown_kind, "unknown counting mode");
  }

  /// |H|^(v-e) / |G|^((m+n)/2 + v) * #Col.
  ExactScalar invariant(const Tuple& g_in, const Tuple& g_out) const {
    return normalize(count(g_in, g_out));
  }

  ExactScalar normalize(const BigInt& count) const {
    const long v = static_cast<long>(report_.internal_vertices);
    const long e = static_cast<long>(report_.internal_edges);
    const long half_exp = -static_cast<long>(report_.n_in + report_.n_out) - 2 * v;
    Rational coeff = Rational(count) * rpow(cm_.h().order(), v - e);
    return ExactScalar::from_half_exponent(std::move(coeff), half_exp, cm_.g().order());
  }

  std::uint64_t fast_states() const { return detail::saturating_pow(cm_.g().order(), var_edges_.size()); }

  std::uint64_t oracle_states() const {
    std::uint64_t a = fast_states();
    std::uint64_t b = detail::saturating_pow(cm_.h().order(), s_.faces.size());
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
  }

  /// Calls visit(const Colouring&) for every colouring in Col(g_in; g_out),
  /// in oracle order.
  template <class Visitor>
  void for_each_colouring(const Tuple& g_in, const Tuple& g_out, Visitor&& visit) const {
    detail::check_boundary(s_, cm_, g_in, g_out);
    require_oracle_cap();
    const std::size_t ng = cm_.g().order(), nh = cm_.h().order();
    const std::size_t ne = var_edges_.size(), nf = s_.faces.size();
    std::vector<std::size_t> digits(ne + nf, 0);
    Colouring col;
    while (true) {
      for (std::size_t i = 0; i < ne; ++i) col.edge_colour[var_edges_[i]] = static_cast<elem_t>(digits[i]);
      for (std::size_t f = 0; f < nf; ++f) col.face_colour[f] = static_cast<elem_t>(digits[ne + f]);
      if (check_fake_flat(s_, cm_, col, g_in, g_out)) visit(col);
      // odometer, first edge most significant, faces least significant
      std::size_t pos = ne + nf;
      while (pos > 0) {
        --pos;
        const std::size_t radix = pos < ne ? ng : nh;
        if (++digits[pos] < radix) break;
        digits[pos] = 0;
        if (pos == 0) return;
      }
      if (ne + nf == 0) return;
    }
  }

 private:
  struct Factor {
    std::uint32_t slot;
    bool inverse;
  };
  struct CompiledFace {
    std::vector<Factor> factors;
  };

  void require_oracle_cap() const {
    if (oracle_states() > opts_.max_oracle_states) {
      throw Error(Errc::size_limit, "oracle enumeration of " + std::to_string(oracle_states()) +
                                        " states exceeds cap " + std::to_string(opts_.max_oracle_states));
    }
  }

  BigInt count_oracle(const Tuple& g_in, const Tuple& g_out) const {
    std::uint64_t n = 0;
    for_each_colouring(g_in, g_out, [&](const Colouring&) { ++n; });
    return BigInt(n);
  }

  struct Walk {
    const ColouringCounter& self;
    std::vector<elem_t> values;
    const std::vector<elem_t>& mul;
    const std::vector<elem_t>& inv;
    const Subgroup& image;
    std::size_t ng;

    bool face_ok(std::size_t face) const {
      elem_t p = 0;
      for (const Factor& f : self.compiled_[face].factors) {
        elem_t x = values[f.slot];
        if (f.inverse) x = inv[x];
        p = mul[p * ng + x];
      }
      return image.contains(p);
    }

    bool faces_ok(std::size_t var) const {
      for (std::size_t face : self.faces_at_var_[var])
        if (!face_ok(face)) return false;
      return true;
    }

    std::uint64_t walk(std::size_t var) {
      if (var == self.var_edges_.size()) return 1;
      std::uint64_t total = 0;
      for (elem_t x = 0; x < ng; ++x) {
        values[var] = x;
        if (faces_ok(var)) total += walk(var + 1);
      }
      return total;
    }
  };

  Walk make_walk(const Tuple& g_in, const Tuple& g_out) const {
    Walk w{*this, std::vector<elem_t>(var_edges_.size() + s_.n_in + s_.n_out, 0), cm_.g().raw_table(),
           cm_.g().raw_inverse(), cm_.image(), cm_.g().order()};
    std::copy(g_in.begin(), g_in.end(), w.values.begin() + static_cast<std::ptrdiff_t>(var_edges_.size()));
    std::copy(g_out.begin(), g_out.end(),
              w.values.begin() + static_cast<std::ptrdiff_t>(var_edges_.size() + s_.n_in));
    return w;
  }

  BigInt count_fast(const Tuple& g_in, const Tuple& g_out) const {
    if (fast_states() > opts_.max_fast_states) {
      throw Error(Errc::size_limit, "edge enumeration of " + std::to_string(fast_states()) +
                                        " states exceeds cap " + std::to_string(opts_.max_fast_states));
    }
    const std::size_t nvars = var_edges_.size();
    Walk root = make_walk(g_in, g_out);
    if (!root.faces_ok(nvars)) return 0;

    std::uint64_t valid = 0;
    unsigned workers = opts_.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts_.workers;
    const std::size_t ng = cm_.g().order();
    if (workers <= 1 || nvars == 0) {
      valid = root.walk(0);
    } else {
      // worker t takes first-edge values t, t + workers, ...
      workers = static_cast<unsigned>(std::min<std::size_t>(workers, ng));
      std::vector<std::future<std::uint64_t>> parts;
      for (unsigned t = 0; t < workers; ++t) {
        parts.push_back(std::async(std::launch::async, [this, &g_in, &g_out, t, workers, ng] {
          Walk w = make_walk(g_in, g_out);
          std::uint64_t sub = 0;
          for (std::size_t x = t; x < ng; x += workers) {
            w.values[0] = static_cast<elem_t>(x);
            if (w.faces_ok(0)) sub += w.walk(1);
          }
          return sub;
        }));
      }
      for (auto& part : parts) valid += part.get();
    }
    return BigInt(valid) * ipow(BigInt(cm_.kernel().size()), static_cast<unsigned>(s_.faces.size()));
  }

  SurfaceComplex s_;
  CrossedModule cm_;
  EngineOptions opts_;
  SurfaceReport report_;
  std::vector<std::size_t> var_edges_;     // non-boundary edge ids in enumeration order
  std::vector<std::size_t> slot_of_edge_;  // edge id -> index into the value array
  std::vector<CompiledFace> compiled_;
  std::vector<std::vector<std::size_t>> faces_at_var_;
};

inline BigInt count_colourings(const SurfaceComplex& s, const CrossedModule& cm, const Tuple& g_in,
                               const Tuple& g_out, CountMode mode = CountMode::fast, EngineOptions opts = {}) {
  opts.mode = mode;
  return ColouringCounter(s, cm, opts).count(g_in, g_out);
}

inline ExactScalar invariant(const SurfaceComplex& s, const CrossedModule& cm, const Tuple& g_in,
                             const Tuple& g_out, EngineOptions opts = {}) {
  return ColouringCounter(s, cm, opts).invariant(g_in, g_out);
}

/// Every (g_in, g_out) pair in lexicographic order, in-tuple varying fastest.
inline std::vector<std::pair<Tuple, Tuple>> boundary_assignments(const SurfaceComplex& s, std::size_t order) {
  std::vector<Tuple> ins{Tuple{}}, outs{Tuple{}};
  auto expand = [order](std::vector<Tuple>& tuples, std::size_t arity) {
    for (std::size_t k = 0; k < arity; ++k) {
      std::vector<Tuple> next;
      for (const Tuple& t : tuples)
        for (elem_t x = 0; x < order; ++x) {
          Tuple u = t;
          u.push_back(x);
          next.push_back(std::move(u));
        }
      tuples = std::move(next);
    }
  };
  expand(ins, s.n_in);
  expand(outs, s.n_out);
  std::vector<std::pair<Tuple, Tuple>> all;
  for (const Tuple& out : outs)
    for (const Tuple& in : ins) all.emplace_back(in, out);
  return all;
}

// ---------------------------------------------------------------------------
// Closed forms for the catalogue surfaces.

/// The invariant of a catalogue surface from its closed formula.
inline ExactScalar closed_form(SurfaceKind kind, const CrossedModule& cm, const Tuple& g_in = {},
                               const Tuple& g_out = {}) {
  const std::uint64_t G = cm.g().order(), H = cm.h().order(), K = cm.kernel().size();
  detail::check_boundary(make_surface(kind), cm, g_in, g_out);
  switch (kind) {
    case SurfaceKind::sphere: return ExactScalar(Rational(BigInt(H * K), BigInt(G)), 0, G);
    case SurfaceKind::disk_in:
    case SurfaceKind::disk_out: {
      const elem_t g = kind == SurfaceKind::disk_in ? g_in[0] : g_out[0];
      const std::uint64_t indicator = cm.image().contains(g) ? 1 : 0;
      return ExactScalar::from_half_exponent(Rational(BigInt(K * indicator)), -1, G);
    }
    case SurfaceKind::cylinder:
      return ExactScalar(Rational(BigInt(c_value(cm, g_in[0], g_out[0])), BigInt(H * G)), 0, G);
    case SurfaceKind::torus: return ExactScalar(Rational(BigInt(commutator_triples(cm)), BigInt(G * H)), 0, G);
  }
  throw Error(Errc::unknown_kind, "unknown surface kind");
}

inline ExactScalar closed_form(std::string_view kind, const CrossedModule& cm, const Tuple& g_in = {},
                               const Tuple& g_out = {}) {
  return closed_form(surface_kind_from_string(kind), cm, g_in, g_out);
}

// ---------------------------------------------------------------------------
// Orientation and basepoint independence.

/// Invariant unchanged when a non-boundary edge is reversed.
inline bool orientation_flip_check(const SurfaceComplex& s, const CrossedModule& cm, std::size_t edge,
                                   const Tuple& g_in, const Tuple& g_out, EngineOptions opts = {}) {
  return invariant(s, cm, g_in, g_out, opts) == invariant(flip_edge(s, edge), cm, g_in, g_out, opts);
}

/// Invariant unchanged when a face's basepoint moves to `new_pos`, and
/// h -> g^-1 |> h (g the word product from the old basepoint to the new one)
/// maps Col(S) bijectively onto Col(S'). The bijection is only checked when
/// the oracle cap allows enumeration.
inline bool basepoint_shift_check(const SurfaceComplex& s, const CrossedModule& cm, std::size_t face,
                                  std::size_t new_pos, const Tuple& g_in, const Tuple& g_out,
                                  EngineOptions opts = {}) {
  const SurfaceComplex moved = with_basepoint(s, face, new_pos);
  if (invariant(s, cm, g_in, g_out, opts) != invariant(moved, cm, g_in, g_out, opts)) return false;

  ColouringCounter before(s, cm, opts), after(moved, cm, opts);
  if (before.oracle_states() > opts.max_oracle_states) return true;

  const Face& f = s.faces[face];
  const std::size_t span = (new_pos + f.word.size() - f.basepoint) % f.word.size();
  std::vector<std::pair<std::map<std::size_t, elem_t>, std::map<std::size_t, elem_t>>> images;
  bool ok = true;
  before.for_each_colouring(g_in, g_out, [&](const Colouring& col) {
    const elem_t g = word_product(s, cm, face, f.basepoint, span, col, g_in, g_out);
    Colouring shifted = col;
    shifted.face_colour[face] = cm.act(cm.g().inv(g), col.face_colour.at(face));
    if (!check_fake_flat(moved, cm, shifted, g_in, g_out)) ok = false;
    images.emplace_back(std::move(shifted.edge_colour), std::move(shifted.face_colour));
  });
  std::uint64_t count_after = 0;
  after.for_each_colouring(g_in, g_out, [&](const Colouring&) { ++count_after; });
  // an injective map into Col(S') of the same size is a bijection
  std::sort(images.begin(), images.end());
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  return ok && injective && images.size() == count_after;
}

}  // namespace ccs
