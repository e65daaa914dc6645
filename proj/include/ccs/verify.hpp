#pragma once

// Every property suite run against one crossed module.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccs/check.hpp"
#include "ccs/colouring.hpp"
#include "ccs/crossed_module.hpp"
#include "ccs/surface.hpp"
#include "ccs/tqft.hpp"
#include "ccs/two_group.hpp"

namespace ccs {

struct VerifyOptions {
  EngineOptions engine;
  std::size_t move_sequences = 20;
  std::size_t max_move_depth = 6;
  std::uint64_t seed = 20240501;
  /// Gluing checks are skipped above this |G|.
  std::size_t max_glue_order = 6;
};

inline std::string to_string(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

inline CheckResult group_axioms_check(const CrossedModule& cm) {
  CheckResult r{"group, action and crossed-module axioms"};
  try {
    FiniteGroup g(cm.g().table()), h(cm.h().table());
    CrossedModule again = build_crossed_module(g, h, cm.boundary().map(), cm.action().table());
    if (again.image().size() * again.kernel().size() != h.order()) r.fail("|H| != |A||K|");
    if (!again.kernel().is_normal() || !again.image().is_normal()) r.fail("kernel or image not normal");
  } catch (const Error& e) {
    r.fail(e.what());
  }
  return r;
}

/// commuting fraction * |X| = #conjugacy classes of X for X = G and H.
inline CheckResult commuting_fraction_check(const CrossedModule& cm) {
  CheckResult r{"commuting fraction * order = #conjugacy classes"};
  for (const FiniteGroup* g : {&cm.g(), &cm.h()}) {
    if (commuting_fraction(*g) * g->order() != Rational(conjugacy_classes(*g).size())) {
      r.fail("fails for " + g->name());
    }
  }
  return r;
}

inline CheckResult oracle_agreement_check(const SurfaceComplex& s, const CrossedModule& cm, EngineOptions opts) {
  CheckResult r{"oracle = fast on " + s.name};
  ColouringCounter counter(s, cm, opts);
  if (counter.oracle_states() > opts.max_oracle_states) {
    r.detail = "skipped: above oracle cap";
    return r;
  }
  for (const auto& [in, out] : boundary_assignments(s, cm.g().order()))
    if (counter.count(in, out, CountMode::fast) != counter.count(in, out, CountMode::oracle)) {
      r.fail("differs at in " + to_string(in) + " out " + to_string(out));
    }
  return r;
}

inline CheckResult closed_form_check(SurfaceKind kind, const CrossedModule& cm, EngineOptions opts) {
  const SurfaceComplex s = make_surface(kind);
  CheckResult r{"closed form = invariant on " + s.name};
  ColouringCounter counter(s, cm, opts);
  for (const auto& [in, out] : boundary_assignments(s, cm.g().order())) {
    const ExactScalar a = counter.invariant(in, out), b = closed_form(kind, cm, in, out);
    if (!(a == b)) r.fail(a.str(true) + " != " + b.str(true) + " at in " + to_string(in) + " out " + to_string(out));
  }
  return r;
}

/// Every edge reversal and every basepoint position leaves Z unchanged.
inline CheckResult orientation_basepoint_check(const SurfaceComplex& s, const CrossedModule& cm, EngineOptions opts) {
  CheckResult r{"orientation and basepoint independence on " + s.name};
  const TqftMatrix z = matrix_of(s, cm, opts);
  for (std::size_t e = 0; e < s.edges.size(); ++e)
    if (!s.edges[e].is_boundary() && !(matrix_of(flip_edge(s, e), cm, opts) == z)) {
      r.fail("flipping edge " + std::to_string(e));
    }
  for (std::size_t f = 0; f < s.faces.size(); ++f)
    for (std::size_t p = 0; p < s.faces[f].word.size(); ++p) {
      if (!(matrix_of(with_basepoint(s, f, p), cm, opts) == z)) {
        r.fail("basepoint " + std::to_string(p) + " on face " + std::to_string(f));
      }
      for (const auto& [in, out] : boundary_assignments(s, cm.g().order()))
        if (!basepoint_shift_check(s, cm, f, p, in, out, opts)) {
          r.fail("basepoint bijection fails at position " + std::to_string(p));
        }
    }
  return r;
}

/// Random sequences of Moves I and II; Z compared after every step.
inline CheckResult move_invariance_check(const SurfaceComplex& s, const CrossedModule& cm, std::size_t sequences,
                                         std::size_t max_depth, std::uint64_t seed, EngineOptions opts) {
  CheckResult r{"Moves I and II preserve Z on " + s.name};
  std::mt19937_64 rng(seed);
  const TqftMatrix z = matrix_of(s, cm, opts);
  for (std::size_t seq = 0; seq < sequences; ++seq) {
    const std::size_t depth = 1 + seq % max_depth;
    SurfaceComplex cur = s;
    for (std::size_t step = 0; step < depth; ++step) {
      cur = random_move_sequence(cur, 1, rng, s.edges.size() + max_depth);
      validate(cur);
      if (!(matrix_of(cur, cm, opts) == z)) {
        r.fail("sequence " + std::to_string(seq) + " step " + std::to_string(step));
        return r;
      }
    }
  }
  return r;
}

inline CheckResult gluing_check(const SurfaceComplex& m1, const SurfaceComplex& m2, const CrossedModule& cm,
                                EngineOptions opts) {
  const SurfaceComplex glued = glue(m1, m2);
  CheckResult r{"Z(" + glued.name + ") = Z(" + m2.name + ") Z(" + m1.name + ")"};
  validate(glued);
  if (!(matrix_of(glued, cm, opts) == compose(matrix_of(m2, cm, opts), matrix_of(m1, cm, opts)))) {
    r.fail("matrices differ");
  }
  return r;
}

inline std::vector<CheckResult> verify_module(const CrossedModule& cm, const VerifyOptions& vo = {}) {
  std::vector<CheckResult> out;
  const EngineOptions& opts = vo.engine;
  out.push_back(group_axioms_check(cm));
  out.push_back(commuting_fraction_check(cm));

  for (SurfaceKind kind : all_surface_kinds()) {
    const SurfaceComplex s = make_surface(kind);
    out.push_back(oracle_agreement_check(s, cm, opts));
    out.push_back(closed_form_check(kind, cm, opts));
    out.push_back(orientation_basepoint_check(s, cm, opts));
  }
  std::uint64_t seed = vo.seed;
  for (SurfaceKind kind : all_surface_kinds()) {
    out.push_back(move_invariance_check(make_surface(kind), cm, vo.move_sequences, vo.max_move_depth, seed++, opts));
  }
  if (cm.g().order() <= vo.max_glue_order) {
    const SurfaceComplex cyl = make_cylinder();
    out.push_back(gluing_check(cyl, cyl, cm, opts));
    out.push_back(gluing_check(cyl, make_disk_in(), cm, opts));
    out.push_back(gluing_check(make_disk_out(), cyl, cm, opts));
    out.push_back(gluing_check(make_disk_out(), make_disk_in(), cm, opts));
  }

  const CTable c = c_table(cm);
  {
    CheckResult r{"C fast = C oracle"};
    if (c != c_table(cm, true)) r.fail("tables differ");
    out.push_back(r);
  }
  const TwoConjPartition classes = two_conjugacy_classes(cm, c);
  const TqftMatrix zc = matrix_of(make_cylinder(), cm, opts);
  out.push_back(idempotency_check(zc));
  out.push_back(class_eigenvector_check(zc, classes));
  out.push_back(check_cylinder_identity(cm, c));
  out.push_back(equivalence_check(cm, c, classes));
  out.push_back(witness_bijection_check(cm));
  out.push_back(c_symmetry_check(c));
  out.push_back(class_constancy_check(c));
  out.push_back(row_sum_check(cm, c));
  out.push_back(class_size_check(cm, c, classes));
  out.push_back(verify_gcf_proposition(cm, c, classes));
  out.push_back(torus_chain_check(cm, c));
  {
    CheckResult r{"torus invariant = gcf * |G|"};
    const ExactScalar torus = invariant(make_torus(), cm, {}, {}, opts);
    if (!(torus == ExactScalar(generalized_commuting_fraction(cm) * cm.g().order(), 0, cm.g().order()))) {
      r.fail("torus invariant " + torus.str(true));
    }
    out.push_back(r);
  }
  if (cm.h().order() == 1) {
    CheckResult r{"H trivial: torus invariant = #conjugacy classes"};
    const ExactScalar torus = invariant(make_torus(), cm, {}, {}, opts);
    if (!(torus == ExactScalar(Rational(conjugacy_classes(cm.g()).size()), 0, cm.g().order()))) {
      r.fail("torus invariant " + torus.str(true));
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace ccs
