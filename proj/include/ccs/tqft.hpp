#pragma once

// Z_M as a matrix from V_in (basis: in-tuples) to V_out (basis: out-tuples).
// Rows are out-tuples and columns in-tuples, both enumerated
// lexicographically by element index with slot 0 most significant.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccs/check.hpp"
#include "ccs/colouring.hpp"
#include "ccs/two_group.hpp"

namespace ccs {

class TqftMatrix {
 public:
  TqftMatrix(CrossedModule cm, std::size_t n_in, std::size_t n_out)
      : cm_(std::move(cm)),
        n_in_(n_in),
        n_out_(n_out),
        rows_(detail::saturating_pow(cm_.g().order(), n_out)),
        cols_(detail::saturating_pow(cm_.g().order(), n_in)),
        entries_(rows_ * cols_, ExactScalar(Rational(0), 0, cm_.g().order())) {}

  const CrossedModule& module() const noexcept { return cm_; }
  std::size_t n_in() const noexcept { return n_in_; }
  std::size_t n_out() const noexcept { return n_out_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const ExactScalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
  ExactScalar& operator()(std::size_t row, std::size_t col) { return entries_[row * cols_ + col]; }

  /// Index of a tuple in the lexicographic basis.
  std::size_t index_of(const Tuple& t) const {
    std::size_t idx = 0;
    for (elem_t x : t) idx = idx * cm_.g().order() + x;
    return idx;
  }

  Tuple tuple_of(std::size_t idx, std::size_t arity) const {
    Tuple t(arity);
    for (std::size_t k = arity; k-- > 0;) {
      t[k] = static_cast<elem_t>(idx % cm_.g().order());
      idx /= cm_.g().order();
    }
    return t;
  }

  friend bool operator==(const TqftMatrix& a, const TqftMatrix& b) {
    return a.n_in_ == b.n_in_ && a.n_out_ == b.n_out_ && a.cm_ == b.cm_ && a.entries_ == b.entries_;
  }

 private:
  CrossedModule cm_;
  std::size_t n_in_, n_out_, rows_, cols_;
  std::vector<ExactScalar> entries_;
};

inline constexpr std::uint64_t kDefaultMaxMatrixEntries = 1'000'000;

inline TqftMatrix matrix_of(const SurfaceComplex& s, const CrossedModule& cm, EngineOptions opts = {},
                            std::uint64_t max_entries = kDefaultMaxMatrixEntries) {
  if (detail::saturating_pow(cm.g().order(), s.n_in + s.n_out) > max_entries) {
    throw Error(Errc::size_limit, "matrix has too many entries");
  }
  ColouringCounter counter(s, cm, opts);
  TqftMatrix z(cm, s.n_in, s.n_out);
  for (std::size_t row = 0; row < z.rows(); ++row)
    for (std::size_t col = 0; col < z.cols(); ++col)
      z(row, col) = counter.invariant(z.tuple_of(col, s.n_in), z.tuple_of(row, s.n_out));
  return z;
}

/// Z2 o Z1.
inline TqftMatrix compose(const TqftMatrix& z2, const TqftMatrix& z1) {
  if (!(z1.module() == z2.module())) throw Error(Errc::module_mismatch, "matrices over different crossed modules");
  if (z1.n_out() != z2.n_in()) {
    throw Error(Errc::arity_mismatch, "cannot compose: " + std::to_string(z1.n_out()) + " outputs into " +
                                          std::to_string(z2.n_in()) + " inputs");
  }
  TqftMatrix out(z1.module(), z1.n_in(), z2.n_out());
  for (std::size_t r = 0; r < z2.rows(); ++r)
    for (std::size_t c = 0; c < z1.cols(); ++c) {
      ExactScalar sum(Rational(0), 0, z1.module().g().order());
      for (std::size_t j = 0; j < z1.rows(); ++j) sum += z2(r, j) * z1(j, c);
      out(r, c) = sum;
    }
  return out;
}

/// Rank of the coefficient matrix by fraction-free (Bareiss) elimination
/// after clearing denominators row by row. A common √|G| factor does not
/// change the rank.
inline std::size_t exact_rank(const TqftMatrix& z) {
  std::vector<std::vector<BigInt>> a(z.rows(), std::vector<BigInt>(z.cols()));
  for (std::size_t r = 0; r < z.rows(); ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < z.cols(); ++c)
      lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(z(r, c).coeff())));
    for (std::size_t c = 0; c < z.cols(); ++c) {
      const Rational& q = z(r, c).coeff();
      a[r][c] = boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q));
    }
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < z.cols() && rank < z.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < z.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == z.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < z.rows(); ++r) {
      for (std::size_t k = c + 1; k < z.cols(); ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// sum_i C(g,i) C(i,j) = |H||G| C(g,j) for all g, j.
inline CheckResult check_cylinder_identity(const CrossedModule& cm, const CTable& c) {
  CheckResult r{"sum_i C(g,i)C(i,j) = |H||G|C(g,j)"};
  const std::size_t n = c.size();
  const BigInt gh = BigInt(cm.g().order()) * cm.h().order();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt lhs = 0;
      for (std::size_t i = 0; i < n; ++i) lhs += BigInt(c[g][i]) * c[i][j];
      if (lhs != gh * c[g][j]) r.fail("violated at (" + std::to_string(g) + "," + std::to_string(j) + ")");
    }
  return r;
}

inline CheckResult check_cylinder_identity(const CrossedModule& cm) { return check_cylinder_identity(cm, c_table(cm)); }

/// Z_C fixes each 2-conjugacy class indicator, and rank Z_C equals the
/// number of classes.
inline CheckResult class_eigenvector_check(const TqftMatrix& zc, const TwoConjPartition& p) {
  CheckResult r{"class indicators span the fixed space of Z_C"};
  const std::size_t n = zc.rows();
  const std::uint64_t base = zc.module().g().order();
  for (std::size_t id = 0; id < p.size(); ++id) {
    std::vector<bool> in_class(n, false);
    for (elem_t g : p.classes[id]) in_class[g] = true;
    for (std::size_t row = 0; row < n; ++row) {
      ExactScalar sum(Rational(0), 0, base);
      for (std::size_t col = 0; col < n; ++col)
        if (in_class[col]) sum += zc(row, col);
      if (!(sum == ExactScalar(Rational(in_class[row] ? 1 : 0), 0, base))) {
        r.fail("indicator of class " + std::to_string(id) + " moves at row " + std::to_string(row));
      }
    }
  }
  const std::size_t rank = exact_rank(zc);
  if (rank != p.size()) {
    r.fail("rank " + std::to_string(rank) + " != " + std::to_string(p.size()) + " classes");
  }
  return r;
}

inline CheckResult class_eigenvector_check(const CrossedModule& cm, EngineOptions opts = {}) {
  return class_eigenvector_check(matrix_of(make_cylinder(), cm, opts), two_conjugacy_classes(cm));
}

inline CheckResult idempotency_check(const TqftMatrix& zc) {
  CheckResult r{"Z_C o Z_C = Z_C"};
  if (!(compose(zc, zc) == zc)) r.fail("cylinder matrix is not idempotent");
  return r;
}

}  // namespace ccs
