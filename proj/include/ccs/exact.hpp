#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>

#include "ccs/error.hpp"

namespace ccs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// base^exponent for a possibly negative exponent.
inline Rational rpow(std::uint64_t base, long exponent) {
  BigInt magnitude = ipow(BigInt(base), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(BigInt(1), magnitude) : Rational(magnitude);
}

/// "p/q", with the denominator always present.
inline std::string fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// "p" for integers, "p/q" otherwise.
inline std::string short_string(const Rational& r) { return r.str(); }

inline bool is_perfect_square(std::uint64_t n) {
  auto root = static_cast<std::uint64_t>(boost::multiprecision::sqrt(BigInt(n)));
  return root * root == n;
}

/// A number coeff * base^(half_power/2) with half_power in {0, 1}.
///
/// Values of the invariant carry a factor |G|^(-(m+n)/2), which is irrational
/// for an odd number of boundary circles, so the square root of the base is
/// kept symbolic. When the base is a perfect square the root is folded into
/// the coefficient and half_power is always 0. Zero is stored with
/// half_power 0 and adds to either parity.
class ExactScalar {
 public:
  ExactScalar() = default;
  explicit ExactScalar(Rational coeff, int half_power = 0, std::uint64_t base = 1)
      : coeff_(std::move(coeff)), half_power_(half_power), base_(base) {
    if (base_ == 0) throw Error(Errc::parse_error, "ExactScalar base must be positive");
    if (half_power_ < 0 || half_power_ > 1) {
      throw Error(Errc::parse_error, "ExactScalar half_power must be 0 or 1");
    }
    canonicalize();
  }

  /// coeff * base^(exponent / 2) for any integer exponent.
  static ExactScalar from_half_exponent(Rational coeff, long half_exponent, std::uint64_t base) {
    // base^(e/2) = base^floor(e/2) * base^(parity/2)
    long whole = half_exponent >= 0 ? half_exponent / 2 : -((-half_exponent + 1) / 2);
    int parity = static_cast<int>(half_exponent - 2 * whole);
    return ExactScalar(coeff * rpow(base, whole), parity, base);
  }

  const Rational& coeff() const noexcept { return coeff_; }
  int half_power() const noexcept { return half_power_; }
  std::uint64_t base() const noexcept { return base_; }
  bool is_zero() const noexcept { return coeff_ == 0; }

  double to_double() const {
    double value = static_cast<double>(coeff_);
    return half_power_ ? value * std::sqrt(static_cast<double>(base_)) : value;
  }

  /// "p/q" or "p/q·√b"; `short_form` drops a unit denominator.
  std::string str(bool short_form = false) const {
    std::string c = short_form ? short_string(coeff_) : fraction_string(coeff_);
    if (half_power_ == 0) return c;
    return c + "·√" + std::to_string(base_);
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    require_same_base(a, b);
    if (a.half_power_ != b.half_power_) {
      throw Error(Errc::arity_mismatch, "adding scalars of different √|G| parity");
    }
    return ExactScalar(a.coeff_ + b.coeff_, a.half_power_, a.base_);
  }

  ExactScalar& operator+=(const ExactScalar& other) { return *this = *this + other; }

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero() || b.is_zero()) return ExactScalar(Rational(0), 0, a.base_);
    if (a.half_power_ && b.half_power_) {
      require_same_base(a, b);
      return ExactScalar(a.coeff_ * b.coeff_ * a.base_, 0, a.base_);
    }
    if (a.half_power_) return ExactScalar(a.coeff_ * b.coeff_, 1, a.base_);
    if (b.half_power_) return ExactScalar(a.coeff_ * b.coeff_, 1, b.base_);
    return ExactScalar(a.coeff_ * b.coeff_, 0, a.base_);
  }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.half_power_ != b.half_power_) return false;
    if (a.half_power_ && a.base_ != b.base_) return false;
    return a.coeff_ == b.coeff_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(true); }

 private:
  static void require_same_base(const ExactScalar& a, const ExactScalar& b) {
    if ((a.half_power_ || b.half_power_) && a.base_ != b.base_) {
      throw Error(Errc::module_mismatch, "scalars over different bases");
    }
  }

  void canonicalize() {
    if (coeff_ == 0) {
      half_power_ = 0;
      return;
    }
    if (half_power_ == 1 && is_perfect_square(base_)) {
      auto root = static_cast<std::uint64_t>(boost::multiprecision::sqrt(BigInt(base_)));
      coeff_ *= root;
      half_power_ = 0;
    }
  }

  Rational coeff_{0};
  int half_power_ = 0;
  std::uint64_t base_ = 1;
};

}  // namespace ccs
