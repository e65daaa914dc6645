#pragma once

// Finite groups as dense multiplication tables.
//
// Elements are indices 0..order-1 and index 0 is always the identity. All
// axioms are checked when a table is built, so any FiniteGroup in circulation
// is a valid group.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ccs/error.hpp"
#include "ccs/exact.hpp"

namespace ccs {

using elem_t = std::uint32_t;

inline constexpr std::size_t kDefaultMaxGroupOrder = 256;

class FiniteGroup {
 public:
  using Table = std::vector<std::vector<elem_t>>;

  FiniteGroup() : FiniteGroup(Table{{0}}, "trivial") {}

  /// Throws AxiomViolation on a table that is not a group with identity 0.
  explicit FiniteGroup(const Table& table, std::string name = {}) {
    auto data = std::make_shared<Data>();
    data->order = table.size();
    data->name = std::move(name);
    if (data->order == 0) throw Error(Errc::parse_error, "group order must be positive");
    if (data->order > kDefaultMaxGroupOrder) {
      throw Error(Errc::size_limit, "group order " + std::to_string(data->order) + " exceeds cap");
    }
    const std::size_t n = data->order;
    data->mul.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      if (table[x].size() != n) throw Error(Errc::parse_error, "multiplication table is not square");
      for (std::size_t y = 0; y < n; ++y) {
        if (table[x][y] >= n) throw Error(Errc::parse_error, "table entry out of range");
        data->mul[x * n + y] = table[x][y];
      }
    }
    data_ = std::move(data);
    verify_axioms();
  }

  std::size_t order() const noexcept { return data_->order; }
  const std::string& name() const noexcept { return data_->name; }

  elem_t mul(elem_t x, elem_t y) const noexcept { return data_->mul[x * data_->order + y]; }
  elem_t inv(elem_t x) const noexcept { return data_->inverse[x]; }
  /// x y x^-1
  elem_t conj(elem_t x, elem_t y) const noexcept { return mul(mul(x, y), inv(x)); }
  /// x y x^-1 y^-1
  elem_t commutator(elem_t x, elem_t y) const noexcept { return mul(conj(x, y), inv(y)); }

  bool is_abelian() const noexcept {
    for (elem_t x = 0; x < order(); ++x)
      for (elem_t y = 0; y < x; ++y)
        if (mul(x, y) != mul(y, x)) return false;
    return true;
  }

  Table table() const {
    Table t(order(), std::vector<elem_t>(order()));
    for (elem_t x = 0; x < order(); ++x)
      for (elem_t y = 0; y < order(); ++y) t[x][y] = mul(x, y);
    return t;
  }

  /// Raw row-major table, for hot loops.
  const std::vector<elem_t>& raw_table() const noexcept { return data_->mul; }
  const std::vector<elem_t>& raw_inverse() const noexcept { return data_->inverse; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || a.data_->mul == b.data_->mul;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::string name;
    std::vector<elem_t> mul;
    std::vector<elem_t> inverse;
  };

  void verify_axioms() {
    auto& d = *data_;
    const elem_t n = static_cast<elem_t>(d.order);
    for (elem_t x = 0; x < n; ++x) {
      if (mul(0, x) != x || mul(x, 0) != x) throw AxiomViolation(Axiom::identity, {0, x, 0});
    }
    d.inverse.assign(n, 0);
    for (elem_t x = 0; x < n; ++x) {
      std::size_t found = 0;
      for (elem_t y = 0; y < n; ++y) {
        if (mul(x, y) == 0) {
          ++found;
          d.inverse[x] = y;
        }
      }
      if (found != 1) throw AxiomViolation(Axiom::inverse, {x, 0, 0});
      if (mul(d.inverse[x], x) != 0) throw AxiomViolation(Axiom::inverse, {x, d.inverse[x], 0});
    }
    for (elem_t x = 0; x < n; ++x)
      for (elem_t y = 0; y < n; ++y)
        for (elem_t z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw AxiomViolation(Axiom::associativity, {x, y, z});
          }
  }

  std::shared_ptr<Data> data_;  // never mutated after construction
};

inline FiniteGroup build_group(std::size_t order, const FiniteGroup::Table& table, std::string name = {}) {
  if (table.size() != order) throw Error(Errc::parse_error, "table has wrong number of rows");
  return FiniteGroup(table, std::move(name));
}

inline FiniteGroup make_trivial_group() { return FiniteGroup(); }

inline FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::parse_error, "cyclic group order must be positive");
  if (n > kDefaultMaxGroupOrder) throw Error(Errc::size_limit, "cyclic group too large");
  FiniteGroup::Table t(n, std::vector<elem_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<elem_t>((x + y) % n);
  return FiniteGroup(t, "Z" + std::to_string(n));
}

/// Permutations of {0..n-1} in lexicographic order of one-line notation, so
/// index 0 is the identity. The product is composition: (a*b)(i) = a(b(i)).
inline std::vector<std::vector<std::size_t>> symmetric_elements(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline FiniteGroup make_symmetric(std::size_t n) {
  if (n == 0) throw Error(Errc::parse_error, "symmetric group degree must be positive");
  if (n > 5) throw Error(Errc::size_limit, "symmetric groups are limited to degree 5");
  auto perms = symmetric_elements(n);
  auto index_of = [&](const std::vector<std::size_t>& p) {
    return static_cast<elem_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  FiniteGroup::Table t(perms.size(), std::vector<elem_t>(perms.size()));
  std::vector<std::size_t> composed(n);
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (std::size_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(composed);
    }
  return FiniteGroup(t, "S" + std::to_string(n));
}

/// Element (a, b) has index a * |G2| + b.
inline FiniteGroup make_direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  if (n1 * n2 > kDefaultMaxGroupOrder) throw Error(Errc::size_limit, "direct product too large");
  FiniteGroup::Table t(n1 * n2, std::vector<elem_t>(n1 * n2));
  for (elem_t a1 = 0; a1 < n1; ++a1)
    for (elem_t b1 = 0; b1 < n2; ++b1)
      for (elem_t a2 = 0; a2 < n1; ++a2)
        for (elem_t b2 = 0; b2 < n2; ++b2)
          t[a1 * n2 + b1][a2 * n2 + b2] = static_cast<elem_t>(g1.mul(a1, a2) * n2 + g2.mul(b1, b2));
  return FiniteGroup(t, g1.name() + "x" + g2.name());
}

/// Quaternion group Q8. Index 2u + s encodes (-1)^s times unit u in (1, i, j, k).
inline FiniteGroup make_quaternion() {
  // unit products: units[u][v] = (sign, unit) of u*v
  constexpr int kUnit[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  FiniteGroup::Table t(8, std::vector<elem_t>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int* p = kUnit[x / 2][y / 2];
      int sign = (x % 2) ^ (y % 2) ^ p[0];
      t[x][y] = static_cast<elem_t>(2 * p[1] + sign);
    }
  return FiniteGroup(t, "Q8");
}

class Subgroup {
 public:
  /// Throws if members do not form a subgroup.
  Subgroup(FiniteGroup ambient, std::vector<elem_t> members)
      : ambient_(std::move(ambient)), members_(std::move(members)), contains_(ambient_.order(), false) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (elem_t x : members_) {
      if (x >= ambient_.order()) throw Error(Errc::parse_error, "subgroup member out of range");
      contains_[x] = true;
    }
    if (members_.empty() || !contains_[0]) throw Error(Errc::axiom_violation, "subgroup lacks identity");
    for (elem_t x : members_) {
      if (!contains_[ambient_.inv(x)]) throw AxiomViolation(Axiom::inverse, {x, 0, 0});
      for (elem_t y : members_)
        if (!contains_[ambient_.mul(x, y)]) throw AxiomViolation(Axiom::associativity, {x, y, 0});
    }
  }

  const FiniteGroup& ambient() const noexcept { return ambient_; }
  const std::vector<elem_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(elem_t x) const noexcept { return contains_[x]; }
  const std::vector<bool>& mask() const noexcept { return contains_; }

  bool is_normal() const {
    for (elem_t k : members_)
      for (elem_t x = 0; x < ambient_.order(); ++x)
        if (!contains_[ambient_.conj(x, k)]) return false;
    return true;
  }

 private:
  FiniteGroup ambient_;
  std::vector<elem_t> members_;
  std::vector<bool> contains_;
};

class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<elem_t> image_of)
      : source_(std::move(source)), target_(std::move(target)), image_of_(std::move(image_of)) {
    if (image_of_.size() != source_.order()) throw Error(Errc::parse_error, "hom map has wrong length");
    for (elem_t y : image_of_)
      if (y >= target_.order()) throw Error(Errc::parse_error, "hom image out of range");
    if (image_of_[0] != 0) throw AxiomViolation(Axiom::homomorphism, {0, 0, 0});
    for (elem_t x = 0; x < source_.order(); ++x)
      for (elem_t y = 0; y < source_.order(); ++y)
        if (image_of_[source_.mul(x, y)] != target_.mul(image_of_[x], image_of_[y])) {
          throw AxiomViolation(Axiom::homomorphism, {x, y, 0});
        }
  }

  static GroupHom identity(const FiniteGroup& g) {
    std::vector<elem_t> map(g.order());
    std::iota(map.begin(), map.end(), 0);
    return GroupHom(g, g, std::move(map));
  }

  static GroupHom trivial(const FiniteGroup& source, const FiniteGroup& target) {
    return GroupHom(source, target, std::vector<elem_t>(source.order(), 0));
  }

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<elem_t>& map() const noexcept { return image_of_; }
  elem_t operator()(elem_t x) const noexcept { return image_of_[x]; }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.image_of_ == b.image_of_;
  }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<elem_t> image_of_;
};

/// A left action of `actor` on `space` by automorphisms.
class GroupAction {
 public:
  using Table = std::vector<std::vector<elem_t>>;

  GroupAction(FiniteGroup actor, FiniteGroup space, const Table& act)
      : actor_(std::move(actor)), space_(std::move(space)) {
    const std::size_t ng = actor_.order(), nh = space_.order();
    if (act.size() != ng) throw Error(Errc::parse_error, "action table has wrong number of rows");
    act_.resize(ng * nh);
    for (elem_t g = 0; g < ng; ++g) {
      if (act[g].size() != nh) throw Error(Errc::parse_error, "action table row has wrong length");
      for (elem_t h = 0; h < nh; ++h) {
        if (act[g][h] >= nh) throw Error(Errc::parse_error, "action value out of range");
        act_[g * nh + h] = act[g][h];
      }
    }
    for (elem_t h = 0; h < nh; ++h)
      if ((*this)(0, h) != h) throw AxiomViolation(Axiom::action_identity, {0, h, 0});
    for (elem_t g1 = 0; g1 < ng; ++g1)
      for (elem_t g2 = 0; g2 < ng; ++g2)
        for (elem_t h = 0; h < nh; ++h)
          if ((*this)(actor_.mul(g1, g2), h) != (*this)(g1, (*this)(g2, h))) {
            throw AxiomViolation(Axiom::action_law, {g1, g2, h});
          }
    for (elem_t g = 0; g < ng; ++g) {
      std::vector<bool> hit(nh, false);
      for (elem_t h = 0; h < nh; ++h) {
        if (hit[(*this)(g, h)]) throw AxiomViolation(Axiom::action_automorphism, {g, h, 0});
        hit[(*this)(g, h)] = true;
        for (elem_t h2 = 0; h2 < nh; ++h2)
          if ((*this)(g, space_.mul(h, h2)) != space_.mul((*this)(g, h), (*this)(g, h2))) {
            throw AxiomViolation(Axiom::action_automorphism, {g, h, h2});
          }
      }
    }
  }

  static GroupAction trivial(const FiniteGroup& actor, const FiniteGroup& space) {
    Table t(actor.order(), std::vector<elem_t>(space.order()));
    for (auto& row : t) std::iota(row.begin(), row.end(), 0);
    return GroupAction(actor, space, t);
  }

  static GroupAction conjugation(const FiniteGroup& g) {
    Table t(g.order(), std::vector<elem_t>(g.order()));
    for (elem_t x = 0; x < g.order(); ++x)
      for (elem_t y = 0; y < g.order(); ++y) t[x][y] = g.conj(x, y);
    return GroupAction(g, g, t);
  }

  const FiniteGroup& actor() const noexcept { return actor_; }
  const FiniteGroup& space() const noexcept { return space_; }
  elem_t operator()(elem_t g, elem_t h) const noexcept { return act_[g * space_.order() + h]; }

  Table table() const {
    Table t(actor_.order(), std::vector<elem_t>(space_.order()));
    for (elem_t g = 0; g < actor_.order(); ++g)
      for (elem_t h = 0; h < space_.order(); ++h) t[g][h] = (*this)(g, h);
    return t;
  }

  friend bool operator==(const GroupAction& a, const GroupAction& b) {
    return a.actor_ == b.actor_ && a.space_ == b.space_ && a.act_ == b.act_;
  }

 private:
  FiniteGroup actor_;
  FiniteGroup space_;
  std::vector<elem_t> act_;
};

inline Subgroup kernel(const GroupHom& f) {
  std::vector<elem_t> members;
  for (elem_t x = 0; x < f.source().order(); ++x)
    if (f(x) == 0) members.push_back(x);
  return Subgroup(f.source(), std::move(members));
}

inline Subgroup image(const GroupHom& f) {
  std::vector<elem_t> members(f.map().begin(), f.map().end());
  Subgroup im(f.target(), std::move(members));
  if (im.size() * kernel(f).size() != f.source().order()) {
    throw Error(Errc::identity_violation, "|source| != |image| * |kernel|");
  }
  return im;
}

/// Orbits under conjugation, each sorted, ordered by least member.
inline std::vector<std::vector<elem_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<elem_t>> classes;
  std::vector<bool> seen(g.order(), false);
  for (elem_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<elem_t> cls;
    for (elem_t y = 0; y < g.order(); ++y) {
      elem_t c = g.conj(y, x);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline std::uint64_t commuting_pairs(const FiniteGroup& g) {
  std::uint64_t count = 0;
  for (elem_t x = 0; x < g.order(); ++x)
    for (elem_t y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++count;
  return count;
}

inline Rational commuting_fraction(const FiniteGroup& g) {
  return Rational(BigInt(commuting_pairs(g)), BigInt(g.order() * g.order()));
}

}  // namespace ccs
