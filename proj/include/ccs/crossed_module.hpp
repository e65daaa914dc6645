#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccs/group.hpp"

namespace ccs {

/// A finite crossed module (G, H, d: H -> G, |>) with both axioms verified.
class CrossedModule {
 public:
  CrossedModule(GroupHom boundary, GroupAction action, std::string name = {})
      : boundary_(std::move(boundary)),
        action_(std::move(action)),
        kernel_(ccs::kernel(boundary_)),
        image_(ccs::image(boundary_)),
        name_(std::move(name)) {
    if (!(boundary_.target() == action_.actor()) || !(boundary_.source() == action_.space())) {
      throw Error(Errc::module_mismatch, "boundary and action are over different groups");
    }
    verify();
  }

  const FiniteGroup& g() const noexcept { return boundary_.target(); }
  const FiniteGroup& h() const noexcept { return boundary_.source(); }
  const GroupHom& boundary() const noexcept { return boundary_; }
  const GroupAction& action() const noexcept { return action_; }
  /// ker d, a central subgroup of H.
  const Subgroup& kernel() const noexcept { return kernel_; }
  /// im d, a normal subgroup of G.
  const Subgroup& image() const noexcept { return image_; }
  const std::string& name() const noexcept { return name_; }

  elem_t d(elem_t h) const noexcept { return boundary_(h); }
  elem_t act(elem_t g, elem_t h) const noexcept { return action_(g, h); }

  friend bool operator==(const CrossedModule& a, const CrossedModule& b) {
    return a.boundary_ == b.boundary_ && a.action_ == b.action_;
  }

 private:
  void verify() const {
    const FiniteGroup& G = g();
    const FiniteGroup& H = h();
    for (elem_t x = 0; x < G.order(); ++x)
      for (elem_t y = 0; y < H.order(); ++y)
        if (d(act(x, y)) != G.conj(x, d(y))) throw AxiomViolation(Axiom::equivariance, {x, y, 0});
    for (elem_t h1 = 0; h1 < H.order(); ++h1)
      for (elem_t h2 = 0; h2 < H.order(); ++h2)
        if (act(d(h1), h2) != H.conj(h1, h2)) throw AxiomViolation(Axiom::peiffer, {h1, h2, 0});
    // implied by the Peiffer identity
    for (elem_t k : kernel_.members())
      for (elem_t f = 0; f < H.order(); ++f)
        if (H.mul(k, f) != H.mul(f, k)) {
          throw Error(Errc::kernel_not_central, "kernel element " + std::to_string(k) + " is not central");
        }
  }

  GroupHom boundary_;
  GroupAction action_;
  Subgroup kernel_;
  Subgroup image_;
  std::string name_;
};

inline CrossedModule build_crossed_module(const FiniteGroup& g, const FiniteGroup& h,
                                          const std::vector<elem_t>& boundary,
                                          const GroupAction::Table& action, std::string name = {}) {
  return CrossedModule(GroupHom(h, g, boundary), GroupAction(g, h, action), std::move(name));
}

/// H = G, d = id, |> = conjugation.
inline CrossedModule identity_module(const FiniteGroup& g) {
  return CrossedModule(GroupHom::identity(g), GroupAction::conjugation(g), "id(" + g.name() + ")");
}

/// H trivial; colourings reduce to flat G-colourings.
inline CrossedModule trivial_h_module(const FiniteGroup& g) {
  FiniteGroup h = make_trivial_group();
  return CrossedModule(GroupHom::trivial(h, g), GroupAction::trivial(g, h), "triv->" + g.name());
}

/// Crossed module of a central extension 1 -> K -> H -> G -> 1, acting by
/// g |> h = f h f^-1 for any lift f of g. Every lift is checked.
inline CrossedModule from_central_extension(const GroupHom& boundary, std::string name = {}) {
  const FiniteGroup& H = boundary.source();
  const FiniteGroup& G = boundary.target();
  std::vector<bool> hit(G.order(), false);
  for (elem_t f = 0; f < H.order(); ++f) hit[boundary(f)] = true;
  for (elem_t g = 0; g < G.order(); ++g)
    if (!hit[g]) throw Error(Errc::not_surjective, "element " + std::to_string(g) + " has no preimage");

  constexpr elem_t kUnset = static_cast<elem_t>(-1);
  GroupAction::Table act(G.order(), std::vector<elem_t>(H.order(), kUnset));
  for (elem_t f = 0; f < H.order(); ++f) {
    auto& row = act[boundary(f)];
    for (elem_t h = 0; h < H.order(); ++h) {
      elem_t lifted = H.conj(f, h);
      if (row[h] == kUnset) {
        row[h] = lifted;
      } else if (row[h] != lifted) {
        throw Error(Errc::kernel_not_central, "lifted conjugation depends on the lift of " +
                                                   std::to_string(boundary(f)));
      }
    }
  }
  if (name.empty()) name = H.name() + "->" + G.name();
  return CrossedModule(boundary, GroupAction(G, H, act), std::move(name));
}

}  // namespace ccs
