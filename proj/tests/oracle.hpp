#pragma once

// Brute-force reference computations for the tests. Deliberately naive and
// written against raw tables only, so they share no code path with the
// library's counting engines.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccs/ccs.hpp"

namespace oracle {

using ccs::elem_t;
using ccs::SurfaceComplex;
using Rational = boost::multiprecision::cpp_rational;

struct Tables {
  std::size_t ng, nh;
  std::vector<elem_t> gmul, hmul, d, act;

  explicit Tables(const ccs::CrossedModule& cm)
      : ng(cm.g().order()), nh(cm.h().order()), gmul(cm.g().raw_table()), hmul(cm.h().raw_table()),
        d(cm.boundary().map()) {
    for (std::size_t g = 0; g < ng; ++g)
      for (std::size_t h = 0; h < nh; ++h) act.push_back(cm.action()(g, h));
  }

  elem_t gm(elem_t a, elem_t b) const { return gmul[a * ng + b]; }
  elem_t ginv(elem_t a) const {
    for (elem_t b = 0; b < ng; ++b)
      if (gm(a, b) == 0) return b;
    return 0;
  }
};

/// Edge colour of `e` given the variable assignment and the boundary tuples.
inline elem_t colour_of(const SurfaceComplex& s, std::size_t e, const std::vector<elem_t>& vars,
                        const std::vector<std::size_t>& var_index, const ccs::Tuple& in, const ccs::Tuple& out) {
  const auto& edge = s.edges[e];
  if (edge.kind == ccs::EdgeKind::in_boundary) return in[edge.slot];
  if (edge.kind == ccs::EdgeKind::out_boundary) return out[edge.slot];
  return vars[var_index[e]];
}

/// #{(edge colours, face colours) satisfying fake flatness}: every face
/// colour is tried for every face.
inline std::uint64_t brute_count(const SurfaceComplex& s, const ccs::CrossedModule& cm, const ccs::Tuple& in,
                                      const ccs::Tuple& out) {
  const Tables t(cm);
  std::vector<std::size_t> var_index(s.edges.size(), 0);
  std::size_t nvars = 0;
  for (std::size_t e = 0; e < s.edges.size(); ++e)
    if (!s.edges[e].is_boundary()) var_index[e] = nvars++;
  const std::size_t nf = s.faces.size();

  std::uint64_t total = 0;
  std::vector<elem_t> vars(nvars, 0), fcol(nf, 0);
  while (true) {
    std::vector<elem_t> prod(nf, 0);
    for (std::size_t f = 0; f < nf; ++f) {
      const auto& face = s.faces[f];
      elem_t p = 0;
      for (std::size_t i = 0; i < face.word.size(); ++i) {
        const auto& r = face.word[(face.basepoint + i) % face.word.size()];
        const elem_t c = colour_of(s, r.edge, vars, var_index, in, out);
        p = t.gm(p, r.forward ? c : t.ginv(c));
      }
      prod[f] = p;
    }
    std::fill(fcol.begin(), fcol.end(), 0);
    while (true) {
      bool ok = true;
      for (std::size_t f = 0; f < nf && ok; ++f) ok = t.d[fcol[f]] == prod[f];
      if (ok) ++total;
      std::size_t i = 0;
      while (i < nf && ++fcol[i] == t.nh) fcol[i++] = 0;
      if (i == nf) break;
    }
    std::size_t i = 0;
    while (i < nvars && ++vars[i] == t.ng) vars[i++] = 0;
    if (i == nvars) break;
  }
  return total;
}

inline std::int64_t internal_vertices(const SurfaceComplex& s) {
  std::vector<bool> on_boundary(s.num_vertices, false);
  for (const auto& e : s.edges)
    if (e.is_boundary()) on_boundary[e.tail] = on_boundary[e.head] = true;
  return std::count(on_boundary.begin(), on_boundary.end(), false);
}

inline std::int64_t internal_edges(const SurfaceComplex& s) {
  return std::count_if(s.edges.begin(), s.edges.end(), [](const auto& e) { return !e.is_boundary(); });
}

/// |H|^(v-e) |G|^-v |G|^-(m+n)/2 * count, returned as (rational part, whether a
/// factor |G|^-1/2 remains).
inline std::pair<Rational, bool> brute_invariant(const SurfaceComplex& s, const ccs::CrossedModule& cm,
                                           const ccs::Tuple& in, const ccs::Tuple& out) {
  const std::int64_t v = internal_vertices(s), e = internal_edges(s);
  const std::int64_t boundary = static_cast<std::int64_t>(s.n_in + s.n_out);
  Rational r(brute_count(s, cm, in, out));
  const Rational ng(cm.g().order()), nh(cm.h().order());
  for (std::int64_t i = 0; i < v - e; ++i) r *= nh;
  for (std::int64_t i = 0; i < e - v; ++i) r /= nh;
  for (std::int64_t i = 0; i < v + boundary / 2; ++i) r /= ng;
  return {r, boundary % 2 == 1};
}

inline ccs::ExactScalar invariant_scalar(const SurfaceComplex& s, const ccs::CrossedModule& cm,
                                         const ccs::Tuple& in, const ccs::Tuple& out) {
  const auto [r, half] = brute_invariant(s, cm, in, out);
  // r |G|^-1/2 = (r / |G|) |G|^1/2
  if (half) return ccs::ExactScalar(r / cm.g().order(), 1, cm.g().order());
  return ccs::ExactScalar(r, 0, cm.g().order());
}

/// C(g1, g2) by a double loop over H x G.
inline std::uint64_t c_value(const ccs::CrossedModule& cm, elem_t g1, elem_t g2) {
  const Tables t(cm);
  std::uint64_t n = 0;
  for (elem_t h = 0; h < t.nh; ++h)
    for (elem_t k = 0; k < t.ng; ++k)
      if (t.d[h] == t.gm(t.gm(t.gm(g1, k), t.ginv(g2)), t.ginv(k))) ++n;
  return n;
}

/// #{(h, g1, g2) : d(h) = [g1, g2]}.
inline std::uint64_t triples(const ccs::CrossedModule& cm) {
  const Tables t(cm);
  std::uint64_t n = 0;
  for (elem_t h = 0; h < t.nh; ++h)
    for (elem_t a = 0; a < t.ng; ++a)
      for (elem_t b = 0; b < t.ng; ++b)
        if (t.d[h] == t.gm(t.gm(t.gm(a, b), t.ginv(a)), t.ginv(b))) ++n;
  return n;
}

/// Number of orbits of G acting on itself by conjugation, by marking.
inline std::size_t conjugacy_class_count(const ccs::FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto& tab = g.raw_table();
  std::vector<bool> seen(n, false);
  std::size_t classes = 0;
  for (elem_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++classes;
    for (elem_t y = 0; y < n; ++y) {
      elem_t yi = 0;
      while (tab[y * n + yi] != 0) ++yi;
      seen[tab[tab[y * n + x] * n + yi]] = true;
    }
  }
  return classes;
}

/// #flat G-colourings of a closed surface / |G|^v: H trivial, so every face
/// word must multiply to the identity.
inline Rational flat_groupoid_cardinality(const SurfaceComplex& s, const ccs::FiniteGroup& g) {
  const ccs::CrossedModule cm = ccs::trivial_h_module(g);
  Rational r(brute_count(s, cm, {}, {}));
  for (std::int64_t i = 0; i < internal_vertices(s); ++i) r /= g.order();
  return r;
}

/// Rank of a rational matrix by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
