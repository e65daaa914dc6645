#pragma once

// The named fixture modules X1..X5.
//
//   X1  trivial crossed module (G = H = 1)
//   X2  H trivial over S3                         (alias X2-S3)
//   X3  identity module on Z2                     (alias X3-Z2)
//   X4  central extension Z4 -> Z2, n -> n mod 2  (alias X4-Z4Z2)
//   X5  G = Z2 inverting H = Z3, trivial boundary (alias X5-Z2Z3)

#include <string>
#include <string_view>
#include <vector>

#include "ccs/crossed_module.hpp"

namespace ccs {

inline GroupHom mod_map(const FiniteGroup& source, const FiniteGroup& target) {
  std::vector<elem_t> map(source.order());
  for (elem_t x = 0; x < source.order(); ++x) map[x] = static_cast<elem_t>(x % target.order());
  return GroupHom(source, target, std::move(map));
}

/// Z_n acting on Z_m: the generator of Z_n acts by inversion (n even, or m <= 2).
inline GroupAction inversion_action(const FiniteGroup& actor, const FiniteGroup& cyclic) {
  GroupAction::Table t(actor.order(), std::vector<elem_t>(cyclic.order()));
  for (elem_t g = 0; g < actor.order(); ++g)
    for (elem_t h = 0; h < cyclic.order(); ++h) t[g][h] = (g % 2 == 0) ? h : cyclic.inv(h);
  return GroupAction(actor, cyclic, t);
}

/// Q8 -> Z2 x Z2 with kernel {1, -1}.
inline GroupHom quaternion_quotient() {
  FiniteGroup q8 = make_quaternion();
  FiniteGroup v4 = make_direct_product(make_cyclic(2), make_cyclic(2));
  // unit u in (1, i, j, k) -> (0,0), (1,0), (0,1), (1,1)
  constexpr elem_t kUnitImage[4] = {0, 2, 1, 3};
  std::vector<elem_t> map(8);
  for (elem_t x = 0; x < 8; ++x) map[x] = kUnitImage[x / 2];
  return GroupHom(q8, v4, std::move(map));
}

inline CrossedModule fixture_x1() {
  CrossedModule cm = identity_module(make_trivial_group());
  return CrossedModule(cm.boundary(), cm.action(), "X1");
}

inline CrossedModule fixture_x2() {
  CrossedModule cm = trivial_h_module(make_symmetric(3));
  return CrossedModule(cm.boundary(), cm.action(), "X2");
}

inline CrossedModule fixture_x3() {
  CrossedModule cm = identity_module(make_cyclic(2));
  return CrossedModule(cm.boundary(), cm.action(), "X3");
}

inline CrossedModule fixture_x4() {
  return from_central_extension(mod_map(make_cyclic(4), make_cyclic(2)), "X4");
}

inline CrossedModule fixture_x5() {
  FiniteGroup z2 = make_cyclic(2), z3 = make_cyclic(3);
  return CrossedModule(GroupHom::trivial(z3, z2), inversion_action(z2, z3), "X5");
}

inline std::vector<std::string> fixture_names() { return {"X1", "X2", "X3", "X4", "X5"}; }

inline std::vector<CrossedModule> all_fixtures() {
  return {fixture_x1(), fixture_x2(), fixture_x3(), fixture_x4(), fixture_x5()};
}

inline CrossedModule fixture(std::string_view name) {
  if (name == "X1" || name == "X1-trivial") return fixture_x1();
  if (name == "X2" || name == "X2-S3") return fixture_x2();
  if (name == "X3" || name == "X3-Z2") return fixture_x3();
  if (name == "X4" || name == "X4-Z4Z2") return fixture_x4();
  if (name == "X5" || name == "X5-Z2Z3") return fixture_x5();
  throw Error(Errc::unknown_fixture, "no fixture module named '" + std::string(name) + "'");
}

}  // namespace ccs
