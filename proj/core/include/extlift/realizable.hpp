#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "extlift/chirotope.hpp"
#include "extlift/signature.hpp"

namespace extlift {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  IntMatrix(int rows, int cols, std::vector<Integer> row_major);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Integer& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  /// The columns listed in `columns`, in that order.
  IntMatrix columns(std::span<const int> columns) const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& square);
/// Exact rank.
int matrix_rank(const IntMatrix& m);
/// Integer basis of the right kernel {x : m x = 0}, each vector primitive.
std::vector<std::vector<Integer>> kernel(const IntMatrix& m);

/// r x n integer matrix of full row rank; column e realizes element e.
class RealizationMatrix {
 public:
  /// Throws InvalidInput when the column rank is below the row count.
  explicit RealizationMatrix(IntMatrix entries);

  int rank() const { return entries_.rows(); }
  int size() const { return entries_.cols(); }
  const IntMatrix& entries() const { return entries_; }
  std::vector<Integer> column(int e) const;

  friend bool operator==(const RealizationMatrix&, const RealizationMatrix&) = default;

 private:
  IntMatrix entries_;
};

/// Position of the extension element f: c . v != 0 for every cocircuit
/// functional c of the realization.
struct GenericVector {
  std::vector<Integer> coords;
  friend bool operator==(const GenericVector&, const GenericVector&) = default;
};

/// Heights realizing the lifting element g: for every circuit dependency u,
/// sum_e u_e h_e != 0.
struct HeightVector {
  std::vector<Integer> heights;
  friend bool operator==(const HeightVector&, const HeightVector&) = default;
};

/// Sign of every r x r minor.
Chirotope chirotope_from_matrix(const RealizationMatrix& a);
Chirotope chirotope_from_matrix(const RealizationMatrix& a, GroundSet ground);

/// Independent oracle: circuits from exact kernels of column subsets
/// (canonical, sorted). Does not use chirotope evaluation.
std::vector<SignedSet> oracle_circuits(const RealizationMatrix& a);
/// Independent oracle: cocircuits from exact hyperplane functionals of
/// (r-1)-subsets of columns (canonical, sorted).
std::vector<SignedSet> oracle_cocircuits(const RealizationMatrix& a);

/// Linear functional c with sign(c . a_e) = y(e) for all e. Throws
/// InvalidInput when y is not a signed cocircuit of the realization.
std::vector<Integer> cocircuit_functional(const RealizationMatrix& a, const SignedSet& y);
/// Coefficients u with sum u_e a_e = 0 and sign(u_e) = c(e). Throws
/// InvalidInput when c is not a signed circuit of the realization.
std::vector<Integer> circuit_coefficients(const RealizationMatrix& a, const SignedSet& c);

/// sigma*(Y) = sign(c_Y . v). Throws NotGeneric naming the cocircuit whose
/// functional vanishes at v.
ExtensionSignature localization_from_vector(const RealizationMatrix& a, const GenericVector& v);
/// sigma(C) = sign(-sum_e u_e h_e). Throws NotGeneric naming the circuit whose
/// coefficients annihilate h.
LiftingSignature lifting_from_heights(const RealizationMatrix& a, const HeightVector& h);

/// Rejection sampling of integer coordinates in [-K, K], doubling K after
/// repeated failures. Deterministic in the seed.
GenericVector sample_generic_vector(const RealizationMatrix& a, std::uint64_t seed);
HeightVector sample_generic_heights(const RealizationMatrix& a, std::uint64_t seed);

/// (r+1) x (n+2) matrix realizing an extension-lifting. Column 0 is g = e_0,
/// column 1 is f = (t; v), column e+2 is (h_e; a_e). Row 0 carries the
/// heights, so contracting g leaves exactly the rows of `a` and the minors
/// containing g equal the minors of `a` sign-for-sign.
RealizationMatrix lifted_matrix(const RealizationMatrix& a, const GenericVector& v, const HeightVector& h,
                                const Integer& t);

struct ExtensionLiftingRealization {
  RealizationMatrix matrix;
  Integer t;
};

/// Searches t = 1, 2, 4, ... until f is generic in the lifted arrangement and
/// no cocircuit is positive on g and negative on f. Throws NotGeneric when v or
/// h is not generic for `a`.
ExtensionLiftingRealization realize_extension_lifting(const RealizationMatrix& a, const GenericVector& v,
                                                      const HeightVector& h);

/// Labels "g", "f", then 1..n: the display ground set of an extension-lifting.
GroundSet extension_lifting_ground(int n);

}  // namespace extlift
