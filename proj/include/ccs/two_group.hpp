#pragma once

// The function C(g1, g2) = #{(h, k) in H x G : d(h) = g1 k g2^-1 k^-1}, the
// 2-conjugacy relation it defines, and the generalized commuting fraction.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ccs/check.hpp"
#include "ccs/crossed_module.hpp"
#include "ccs/exact.hpp"

namespace ccs {

/// g1 k g2^-1 k^-1
inline elem_t cylinder_word(const FiniteGroup& G, elem_t g1, elem_t k, elem_t g2) {
  return G.mul(g1, G.conj(k, G.inv(g2)));
}

/// C(g1, g2) as |K| * #{k : g1 k g2^-1 k^-1 in A}.
inline std::uint64_t c_value(const CrossedModule& cm, elem_t g1, elem_t g2) {
  std::uint64_t n = 0;
  for (elem_t k = 0; k < cm.g().order(); ++k)
    if (cm.image().contains(cylinder_word(cm.g(), g1, k, g2))) ++n;
  return n * cm.kernel().size();
}

/// C(g1, g2) by the full double loop over H x G.
inline std::uint64_t c_value_oracle(const CrossedModule& cm, elem_t g1, elem_t g2) {
  std::uint64_t n = 0;
  for (elem_t h = 0; h < cm.h().order(); ++h)
    for (elem_t k = 0; k < cm.g().order(); ++k)
      if (cm.d(h) == cylinder_word(cm.g(), g1, k, g2)) ++n;
  return n;
}

using CTable = std::vector<std::vector<std::uint64_t>>;

inline CTable c_table(const CrossedModule& cm, bool oracle = false) {
  const std::size_t n = cm.g().order();
  CTable t(n, std::vector<std::uint64_t>(n));
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) t[a][b] = oracle ? c_value_oracle(cm, a, b) : c_value(cm, a, b);
  return t;
}

struct CPair {
  elem_t h = 0;
  elem_t k = 0;
  friend auto operator<=>(const CPair&, const CPair&) = default;
};

inline bool in_w(const CrossedModule& cm, const CPair& p, elem_t g1, elem_t g2) {
  return cm.d(p.h) == cylinder_word(cm.g(), g1, p.k, g2);
}

/// W(g1, g2), sorted by (h, k).
inline std::vector<CPair> w_set(const CrossedModule& cm, elem_t g1, elem_t g2,
                                std::uint64_t max_pairs = 10'000'000) {
  if (static_cast<std::uint64_t>(cm.h().order()) * cm.g().order() > max_pairs) {
    throw Error(Errc::size_limit, "W set enumeration exceeds cap");
  }
  std::vector<CPair> w;
  for (elem_t h = 0; h < cm.h().order(); ++h)
    for (elem_t k = 0; k < cm.g().order(); ++k)
      if (in_w(cm, {h, k}, g1, g2)) w.push_back({h, k});
  return w;
}

/// (h, k) -> (k^-1 |> h^-1, k^-1), which maps W(g1, g2) to W(g2, g1) and is
/// its own inverse.
inline CPair swap_witness(const CrossedModule& cm, const CPair& p) {
  const elem_t kinv = cm.g().inv(p.k);
  return {cm.act(kinv, cm.h().inv(p.h)), kinv};
}

/// (h1, k1) * (h2, k2) = (h1 (k1 |> h2), k1 k2), mapping W(g1,g2) x W(g2,g3) to W(g1,g3).
inline CPair compose_witness(const CrossedModule& cm, const CPair& a, const CPair& b) {
  return {cm.h().mul(a.h, cm.act(a.k, b.h)), cm.g().mul(a.k, b.k)};
}

struct TwoConjPartition {
  std::vector<std::vector<elem_t>> classes;  // each sorted, ordered by least member
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
};

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace detail

/// Classes of g1 ~ g2 iff C(g1, g2) != 0, by union-find over one sweep of
/// ordered pairs.
inline TwoConjPartition two_conjugacy_classes(const CrossedModule& cm, const CTable& c) {
  const std::size_t n = cm.g().order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (c[a][b] != 0) {
        std::size_t ra = detail::find_root(parent, a), rb = detail::find_root(parent, b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
  TwoConjPartition p;
  p.class_of.assign(n, 0);
  std::vector<std::size_t> id_of_root(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t root = detail::find_root(parent, g);
    if (id_of_root[root] == n) {
      id_of_root[root] = p.classes.size();
      p.classes.emplace_back();
    }
    p.class_of[g] = id_of_root[root];
    p.classes[id_of_root[root]].push_back(static_cast<elem_t>(g));
  }
  return p;
}

inline TwoConjPartition two_conjugacy_classes(const CrossedModule& cm) {
  return two_conjugacy_classes(cm, c_table(cm));
}

/// Reflexivity, symmetry and transitivity of ~ checked through explicit
/// witnesses, and the partition checked against C directly.
inline CheckResult equivalence_check(const CrossedModule& cm, const CTable& c, const TwoConjPartition& p) {
  CheckResult r{"2-conjugacy is an equivalence relation"};
  const elem_t n = static_cast<elem_t>(cm.g().order());
  for (elem_t g = 0; g < n; ++g)
    if (!in_w(cm, {0, 0}, g, g)) r.fail("(1,1) not in W(" + std::to_string(g) + "," + std::to_string(g) + ")");
  std::vector<std::vector<std::vector<CPair>>> w(n, std::vector<std::vector<CPair>>(n));
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) w[a][b] = w_set(cm, a, b);
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) {
      for (const CPair& x : w[a][b])
        if (!in_w(cm, swap_witness(cm, x), b, a)) r.fail("symmetric witness leaves W");
      for (elem_t z = 0; z < n; ++z)
        for (const CPair& x : w[a][b])
          for (const CPair& y : w[b][z])
            if (!in_w(cm, compose_witness(cm, x, y), a, z)) r.fail("transitive witness leaves W");
    }
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b)
      if ((c[a][b] != 0) != (p.class_of[a] == p.class_of[b])) {
        r.fail("partition disagrees with C at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  return r;
}

/// The witness maps behind C(g1,g2) = C(g2,g1) and, for g1 ~ g2,
/// C(g1,g2) = C(g1,g1), checked to be mutually inverse bijections on the
/// materialized W sets.
inline CheckResult witness_bijection_check(const CrossedModule& cm) {
  CheckResult r{"witness maps are bijections"};
  const elem_t n = static_cast<elem_t>(cm.g().order());
  const FiniteGroup& G = cm.g();
  const FiniteGroup& H = cm.h();
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) {
      const auto wab = w_set(cm, a, b), wba = w_set(cm, b, a), waa = w_set(cm, a, a);
      const std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      for (const CPair& x : wab) {
        const CPair y = swap_witness(cm, x);
        if (!std::binary_search(wba.begin(), wba.end(), y)) r.fail("swap map leaves W at " + at);
        if (swap_witness(cm, y) != x) r.fail("swap map is not an involution at " + at);
      }
      if (wab.empty()) continue;
      // fix (h, k) in W(a, b); alpha: W(a,b) -> W(a,a), beta: W(a,a) -> W(a,b)
      const CPair fixed = wab.front();
      auto alpha = [&](const CPair& p) {
        const elem_t j = G.mul(p.k, G.inv(fixed.k));
        return CPair{H.mul(p.h, cm.act(j, H.inv(fixed.h))), j};
      };
      auto beta = [&](const CPair& p) {
        return CPair{H.mul(p.h, cm.act(p.k, fixed.h)), G.mul(p.k, fixed.k)};
      };
      for (const CPair& x : wab) {
        const CPair y = alpha(x);
        if (!std::binary_search(waa.begin(), waa.end(), y)) r.fail("alpha leaves W at " + at);
        if (beta(y) != x) r.fail("beta o alpha != id at " + at);
      }
      for (const CPair& y : waa) {
        const CPair x = beta(y);
        if (!std::binary_search(wab.begin(), wab.end(), x)) r.fail("beta leaves W at " + at);
        if (alpha(x) != y) r.fail("alpha o beta != id at " + at);
      }
    }
  return r;
}

inline CheckResult c_symmetry_check(const CTable& c) {
  CheckResult r{"C(g1,g2) = C(g2,g1)"};
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      if (c[a][b] != c[b][a]) r.fail("asymmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return r;
}

inline CheckResult class_constancy_check(const CTable& c) {
  CheckResult r{"g1 ~ g2 implies C(g1,g2) = C(g1,g1)"};
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      if (c[a][b] != 0 && c[a][b] != c[a][a]) {
        r.fail("C not constant at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  return r;
}

inline CheckResult row_sum_check(const CrossedModule& cm, const CTable& c) {
  CheckResult r{"sum_i C(g,i) = |H||G|"};
  const std::uint64_t target = cm.h().order() * cm.g().order();
  for (std::size_t g = 0; g < c.size(); ++g)
    if (std::accumulate(c[g].begin(), c[g].end(), std::uint64_t{0}) != target) {
      r.fail("row " + std::to_string(g));
    }
  return r;
}

/// #class(g) = |G||H| / C(g,g), plus symmetry and constancy of C.
inline CheckResult class_size_check(const CrossedModule& cm, const CTable& c, const TwoConjPartition& p) {
  CheckResult r{"class sizes"};
  const std::uint64_t gh = cm.g().order() * cm.h().order();
  for (const auto& cls : p.classes) {
    const elem_t g = cls.front();
    if (c[g][g] == 0 || gh % c[g][g] != 0 || gh / c[g][g] != cls.size()) {
      r.fail("class of " + std::to_string(g) + " has size " + std::to_string(cls.size()));
    }
  }
  for (const auto& sub : {c_symmetry_check(c), class_constancy_check(c)})
    if (!sub.passed) r.fail(sub.name + ": " + sub.detail);
  return r;
}

inline CheckResult class_size_check(const CrossedModule& cm) {
  const CTable c = c_table(cm);
  return class_size_check(cm, c, two_conjugacy_classes(cm, c));
}

/// sum_{g,g1} C(g,g1)^2 / (|G|^2 |H|^2)
inline Rational count_classes_by_squares(const CrossedModule& cm, const CTable& c) {
  BigInt sum = 0;
  for (const auto& row : c)
    for (std::uint64_t x : row) sum += BigInt(x) * x;
  const BigInt gh = BigInt(cm.g().order()) * cm.h().order();
  return Rational(sum, gh * gh);
}

inline Rational count_classes_by_squares(const CrossedModule& cm) { return count_classes_by_squares(cm, c_table(cm)); }

/// #{(h, g1, g2) : d(h) = g1 g2 g1^-1 g2^-1}, as |K| * #{commutators in A}.
inline std::uint64_t commutator_triples(const CrossedModule& cm) {
  const FiniteGroup& G = cm.g();
  std::uint64_t n = 0;
  for (elem_t g1 = 0; g1 < G.order(); ++g1)
    for (elem_t g2 = 0; g2 < G.order(); ++g2)
      if (cm.image().contains(G.commutator(g1, g2))) ++n;
  return n * cm.kernel().size();
}

/// The same count by the full triple loop over H x G x G.
inline std::uint64_t commutator_triples_oracle(const CrossedModule& cm) {
  const FiniteGroup& G = cm.g();
  std::uint64_t n = 0;
  for (elem_t h = 0; h < cm.h().order(); ++h)
    for (elem_t g1 = 0; g1 < G.order(); ++g1)
      for (elem_t g2 = 0; g2 < G.order(); ++g2)
        if (cm.d(h) == G.commutator(g1, g2)) ++n;
  return n;
}

inline Rational generalized_commuting_fraction(const CrossedModule& cm) {
  const std::uint64_t g = cm.g().order();
  return Rational(BigInt(commutator_triples_oracle(cm)), BigInt(cm.h().order() * g * g));
}

/// #classes = gcf * |G|, and every row of C sums to |H||G|.
inline CheckResult verify_gcf_proposition(const CrossedModule& cm, const CTable& c, const TwoConjPartition& p) {
  CheckResult r{"#2-conjugacy classes = gcf * |G|"};
  const Rational predicted = generalized_commuting_fraction(cm) * cm.g().order();
  if (predicted != Rational(p.size())) {
    r.fail("gcf*|G| = " + short_string(predicted) + " but there are " + std::to_string(p.size()) + " classes");
  }
  const Rational squares = count_classes_by_squares(cm, c);
  if (squares != Rational(p.size())) r.fail("sum of squares gives " + short_string(squares));
  const CheckResult rows = row_sum_check(cm, c);
  if (!rows.passed) r.fail(rows.name + ": " + rows.detail);
  return r;
}

inline CheckResult verify_gcf_proposition(const CrossedModule& cm) {
  const CTable c = c_table(cm);
  return verify_gcf_proposition(cm, c, two_conjugacy_classes(cm, c));
}

/// triples / (|G||H|) = sum_g C(g,g) / (|G||H|) = sum C^2 / (|G|^2 |H|^2)
inline CheckResult torus_chain_check(const CrossedModule& cm, const CTable& c) {
  CheckResult r{"torus = trace C = sum of squares"};
  const BigInt gh = BigInt(cm.g().order()) * cm.h().order();
  const Rational from_triples(BigInt(commutator_triples_oracle(cm)), gh);
  BigInt trace = 0;
  for (std::size_t g = 0; g < c.size(); ++g) trace += c[g][g];
  const Rational from_trace(trace, gh);
  const Rational from_squares = count_classes_by_squares(cm, c);
  if (from_triples != from_trace) r.fail("triples " + short_string(from_triples) + " != trace " + short_string(from_trace));
  if (from_trace != from_squares) r.fail("trace " + short_string(from_trace) + " != squares " + short_string(from_squares));
  return r;
}

}  // namespace ccs
