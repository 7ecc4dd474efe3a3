#pragma once

// Exact integer and rational linear algebra: Hermite and Smith normal forms,
// canonical lattices in Z^m and the structure of finitely generated quotients.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace semimon {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer content(std::span<const Integer> v);
/// Divides by the content; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
bool is_zero(std::span<const Integer> v);
IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector subtract(std::span<const Integer> a, std::span<const Integer> b);
IntVector scale(const Integer& k, std::span<const Integer> v);
std::string to_string(std::span<const Integer> v);

/// Floor division for arbitrary-precision integers (rounds toward -inf).
Integer floor_div(const Integer& a, const Integer& b);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntVector row_vector(std::size_t r) const;
  std::vector<IntVector> row_vectors() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  ///< row HNF, zero rows last
  IntMatrix u;  ///< unimodular, u * m == h
};

/// Row-style Hermite normal form: pivots positive, entries above a pivot
/// reduced into [0, pivot).
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix s;  ///< diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix u;
  IntMatrix v;  ///< u * m * v == s
};

SmithForm snf(const IntMatrix& m);

/// Diagonal of a Smith form (length min(rows, cols)).
std::vector<Integer> smith_diagonal(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
/// Indices of a lexicographically first set of linearly independent rows.
std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows);
/// Row basis of {y : y * m == 0}.
IntMatrix left_kernel(const IntMatrix& m);

/// Solves x * a == rhs over Q (a has shape k x t, x has length k). Returns
/// nullopt when inconsistent or when the solution is not unique.
std::optional<std::vector<Rational>> solve_unique(const IntMatrix& a, const std::vector<Rational>& rhs);

/// A subgroup of Z^m stored by its canonical (row HNF) basis, so equality of
/// lattices is equality of values.
class Lattice {
 public:
  Lattice() = default;

  static Lattice zero(std::size_t ambient);
  static Lattice full(std::size_t ambient);
  static Lattice from_rows(std::size_t ambient, const std::vector<IntVector>& rows);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::vector<IntVector> basis_rows() const { return basis_.row_vectors(); }

  bool contains(std::span<const Integer> x) const;
  /// Integer coordinates of x with respect to the basis, if x is in the lattice.
  std::optional<IntVector> coordinates(std::span<const Integer> x) const;
  IntVector combine(std::span<const Integer> coords) const;

  friend bool operator==(const Lattice& a, const Lattice& b) = default;

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
};

struct AbelianQuotient {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;  ///< each >= 2, each dividing the next

  bool is_finite() const noexcept { return free_rank == 0; }
  Integer order() const;
  /// Prime divisors of the torsion part, ascending.
  std::vector<unsigned long> torsion_primes() const;
};

Lattice lattice_from_rows(std::size_t ambient, const std::vector<IntVector>& rows);
bool lattice_member(const Lattice& lattice, std::span<const Integer> x);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);
/// (R-span of L) intersected with Z^m.
Lattice saturation(const Lattice& lattice);
/// Structure of a/b; throws NotSublattice unless b is contained in a.
AbelianQuotient quotient_structure(const Lattice& a, const Lattice& b);
bool is_sublattice(const Lattice& sub, const Lattice& super);

/// Prime factors of a positive integer, ascending (trial division; the values
/// involved are small lattice indices).
std::vector<unsigned long> prime_factors(const Integer& n);

/// Integer matrix p (m x k) with basis * p == identity, for a saturated lattice.
IntMatrix section_of(const Lattice& saturated);

}  // namespace semimon
