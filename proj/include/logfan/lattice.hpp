#pragma once

// Exact integer linear algebra over Z: Hermite and Smith normal forms,
// kernels, cokernels, and the sublattice helpers the monoid and cone code
// is built on. Everything is arbitrary precision; nothing here touches
// floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "logfan/error.hpp"

namespace logfan {

using Int = mpz_class;
using Rational = mpq_class;
using Vec = std::vector<Int>;

Vec make_vec(std::initializer_list<long> values);
Vec zero_vec(std::size_t n);
Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scale(const Int& c, const Vec& a);
bool is_zero(const Vec& a);
Int content(const Vec& a);  // gcd of the entries, 0 for the zero vector
Vec primitive(const Vec& a);  // a / content(a); zero stays zero
std::string to_string(const Vec& a);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Stack `rows` (each of length `cols`) into a matrix.
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  /// Matrix whose columns are `columns` (each of length `rows`).
  static IntMatrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_vectors() const;

  IntMatrix transpose() const;
  /// Rows [begin, end) as a new matrix.
  IntMatrix row_block(std::size_t begin, std::size_t end) const;

  /// Matrix times column vector.
  Vec apply(const Vec& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Cokernel structure Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with d_i | d_{i+1}, d_i ≥ 2.
struct AbelianQuotient {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool has_torsion() const { return !invariant_factors.empty(); }
  friend bool operator==(const AbelianQuotient&, const AbelianQuotient&) = default;
};

struct HermiteForm {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, h = u * a
  std::size_t rank = 0;
};

struct SmithForm {
  IntMatrix d;  // diagonal, d_ii | d_(i+1)(i+1), nonnegative
  IntMatrix u;  // unimodular, d = u * a * v
  IntMatrix v;
  std::size_t rank = 0;
};

/// Row-style HNF: echelon form with positive pivots; entries above a pivot
/// lie in [0, pivot). Zero rows sink to the bottom.
HermiteForm hnf(const IntMatrix& a);
SmithForm snf(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim);

/// Z-basis of {x : a x = 0}, in Hermite normal form.
std::vector<Vec> kernel_basis(const IntMatrix& a);
/// Structure of Z^rows / a(Z^cols).
AbelianQuotient cokernel(const IntMatrix& a);

/// |det a| for square a.
Int abs_det(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);
/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Canonical (HNF) basis of the subgroup of Z^dim generated by `generators`.
std::vector<Vec> lattice_basis(const std::vector<Vec>& generators, std::size_t dim);
/// Basis of (Q-span of generators) ∩ Z^dim.
std::vector<Vec> saturate_lattice(const std::vector<Vec>& generators, std::size_t dim);
/// Integer coordinates of x in the given basis (rows), if x lies in its span over Z.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& x);
/// Rational coordinates of x in the given linearly independent rows, if x lies in their Q-span.
std::optional<std::vector<Rational>> rational_coordinates(const std::vector<Vec>& basis,
                                                          const Vec& x);

/// Surjection Z^dim -> Z^(dim - r) whose kernel is the saturation of a
/// sublattice of rank r, together with the torsion of Z^dim / sublattice.
struct QuotientMap {
  IntMatrix projection;  // (dim - r) x dim
  IntMatrix section;     // dim x (dim - r); projection * section = identity
  std::vector<Int> torsion;  // SNF entries > 1 of the sublattice

  Vec apply(const Vec& x) const { return projection.apply(x); }
  Vec lift(const Vec& y) const { return section.apply(y); }
};
QuotientMap quotient_map(const std::vector<Vec>& sublattice_generators, std::size_t dim);

/// Generalised cross product: for n-1 vectors in Z^n, the vector of signed
/// maximal minors. Zero iff the rows are dependent.
Vec cross_product(const std::vector<Vec>& rows, std::size_t dim);

}  // namespace logfan
