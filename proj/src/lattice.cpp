#include "logfan/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace logfan {

Vec make_vec(std::initializer_list<long> values) {
  Vec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

Int content(const Vec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, x);
  return g;
}

Vec primitive(const Vec& a) {
  Int g = content(a);
  if (g == 0 || g == 1) return a;
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

std::string to_string(const Vec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec IntMatrix::row(std::size_t i) const {
  return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec IntMatrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Vec> IntMatrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
  IntMatrix b(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i - begin, j) = (*this)(i, j);
  return b;
}

Vec IntMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionError("apply: vector length does not match columns");
  Vec y(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << (*this)(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Elementary operations. Rows of `m` are combined in place.

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += c * row_src
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += c * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += c * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Replace rows (a, b) by (s*a + t*b, -(y/g)*a + (x/g)*b), where s x + t y = g.
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Int& s, const Int& t,
                  const Int& p, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int ra = m(a, j);
    Int rb = m(b, j);
    m(a, j) = s * ra + t * rb;
    m(b, j) = p * ra + q * rb;
  }
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (h(i, c) == 0) continue;
      Int x = h(r, c);
      Int y = h(i, c);
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Int p = -y / g;
      Int q = x / g;
      combine_rows(h, r, i, s, t, p, q);
      combine_rows(u, r, i, s, t, p, q);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int f = floor_div(h(i, c), h(r, c));
      if (f != 0) {
        add_row_multiple(h, i, r, -f);
        add_row_multiple(u, i, r, -f);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

SmithForm snf(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t t = 0;

  auto smallest_in = [&](std::size_t t0, bool only_cross) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (d(i, j) == 0) return;
      Int x = abs(d(i, j));
      if (!best || x < best_abs) {
        best = {i, j};
        best_abs = x;
      }
    };
    if (only_cross) {
      for (std::size_t i = t0; i < m; ++i) consider(i, t0);
      for (std::size_t j = t0; j < n; ++j) consider(t0, j);
    } else {
      for (std::size_t i = t0; i < m; ++i)
        for (std::size_t j = t0; j < n; ++j) consider(i, j);
    }
    return best;
  };

  while (t < std::min(m, n)) {
    auto piv = smallest_in(t, false);
    if (!piv) break;
    swap_rows(d, t, piv->first);
    swap_rows(u, t, piv->first);
    swap_cols(d, t, piv->second);
    swap_cols(v, t, piv->second);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        auto p = smallest_in(t, true);
        swap_rows(d, t, p->first);
        swap_rows(u, t, p->first);
        swap_cols(d, t, p->second);
        swap_cols(v, t, p->second);
        continue;
      }
      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row_multiple(d, t, i, Int(1));
            add_row_multiple(u, t, i, Int(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    ++t;
  }
  return {std::move(d), std::move(u), std::move(v), t};
}

std::size_t rank(const IntMatrix& a) { return hnf(a).rank; }

std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return hnf(IntMatrix::from_rows(vectors, dim)).rank;
}

std::vector<Vec> kernel_basis(const IntMatrix& a) {
  if (a.rows() == 0) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < a.cols(); ++i) {
      Vec e = zero_vec(a.cols());
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  HermiteForm f = hnf(a.transpose());
  std::vector<Vec> rows;
  for (std::size_t i = f.rank; i < a.cols(); ++i) rows.push_back(f.u.row(i));
  return lattice_basis(rows, a.cols());
}

AbelianQuotient cokernel(const IntMatrix& a) {
  AbelianQuotient q;
  if (a.cols() == 0 || a.rows() == 0) {
    q.free_rank = a.rows();
    return q;
  }
  SmithForm s = snf(a);
  q.free_rank = a.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d(i, i) > 1) q.invariant_factors.push_back(s.d(i, i));
  return q;
}

Int abs_det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("abs_det: matrix is not square");
  if (a.rows() == 0) return 1;
  HermiteForm f = hnf(a);
  if (f.rank < a.rows()) return 0;
  Int p = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) p *= f.h(i, i);
  return abs(p);
}

bool is_unimodular(const IntMatrix& a) { return a.rows() == a.cols() && abs_det(a) == 1; }

IntMatrix unimodular_inverse(const IntMatrix& a) {
  HermiteForm f = hnf(a);
  if (f.h != IntMatrix::identity(a.rows()))
    throw PreconditionError("unimodular_inverse: matrix is not unimodular");
  return f.u;
}

std::vector<Vec> lattice_basis(const std::vector<Vec>& generators, std::size_t dim) {
  if (generators.empty()) return {};
  HermiteForm f = hnf(IntMatrix::from_rows(generators, dim));
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < f.rank; ++i) basis.push_back(f.h.row(i));
  return basis;
}

std::vector<Vec> saturate_lattice(const std::vector<Vec>& generators, std::size_t dim) {
  if (generators.empty()) return {};
  std::vector<Vec> orth = kernel_basis(IntMatrix::from_rows(generators, dim));
  if (orth.empty()) return kernel_basis(IntMatrix(0, dim));
  return kernel_basis(IntMatrix::from_rows(orth, dim));
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& x) {
  const std::size_t dim = x.size();
  if (basis.empty()) {
    if (is_zero(x)) return Vec{};
    return std::nullopt;
  }
  HermiteForm f = hnf(IntMatrix::from_rows(basis, dim));
  if (f.rank != basis.size()) throw PreconditionError("coordinates_in: basis is dependent");
  Vec residual = x;
  Vec c(basis.size(), Int(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < f.rank; ++i) {
    while (f.h(i, col) == 0) ++col;
    if (residual[col] % f.h(i, col) != 0) return std::nullopt;
    c[i] = residual[col] / f.h(i, col);
    for (std::size_t j = 0; j < dim; ++j) residual[j] -= c[i] * f.h(i, j);
  }
  if (!is_zero(residual)) return std::nullopt;
  Vec out(basis.size(), Int(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) out[j] += c[i] * f.u(i, j);
  return out;
}

std::optional<std::vector<Rational>> rational_coordinates(const std::vector<Vec>& basis,
                                                          const Vec& x) {
  const std::size_t dim = x.size();
  if (basis.empty()) {
    if (is_zero(x)) return std::vector<Rational>{};
    return std::nullopt;
  }
  HermiteForm f = hnf(IntMatrix::from_rows(basis, dim));
  if (f.rank != basis.size()) throw PreconditionError("rational_coordinates: basis is dependent");
  std::vector<Rational> residual(x.begin(), x.end());
  std::vector<Rational> c(basis.size());
  std::size_t col = 0;
  for (std::size_t i = 0; i < f.rank; ++i) {
    while (f.h(i, col) == 0) ++col;
    c[i] = residual[col] / Rational(f.h(i, col));
    for (std::size_t j = 0; j < dim; ++j) residual[j] -= c[i] * Rational(f.h(i, j));
  }
  for (const Rational& r : residual)
    if (r != 0) return std::nullopt;
  std::vector<Rational> out(basis.size(), Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) out[j] += c[i] * Rational(f.u(i, j));
  return out;
}

QuotientMap quotient_map(const std::vector<Vec>& sublattice_generators, std::size_t dim) {
  QuotientMap q;
  if (sublattice_generators.empty()) {
    q.projection = IntMatrix::identity(dim);
    q.section = IntMatrix::identity(dim);
    return q;
  }
  SmithForm s = snf(IntMatrix::from_rows(sublattice_generators, dim));
  // In coordinates y = V^T x the sublattice is spanned by d_i e_i, i < rank.
  IntMatrix vt = s.v.transpose();
  IntMatrix vt_inv = unimodular_inverse(vt);
  const std::size_t r = s.rank;
  q.projection = vt.row_block(r, dim);
  q.section = IntMatrix(dim, dim - r);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = r; j < dim; ++j) q.section(i, j - r) = vt_inv(i, j);
  for (std::size_t i = 0; i < r; ++i)
    if (s.d(i, i) > 1) q.torsion.push_back(s.d(i, i));
  return q;
}

namespace {

// Fraction-free Gaussian elimination.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Vec cross_product(const std::vector<Vec>& rows, std::size_t dim) {
  if (dim == 0 || rows.size() + 1 != dim) throw DimensionError("cross_product: need dim-1 rows");
  Vec out(dim);
  for (std::size_t skip = 0; skip < dim; ++skip) {
    std::vector<std::vector<Int>> minor(dim - 1);
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      minor[i].reserve(dim - 1);
      for (std::size_t j = 0; j < dim; ++j)
        if (j != skip) minor[i].push_back(rows[i][j]);
    }
    Int det = bareiss_det(std::move(minor));
    out[skip] = (skip % 2 == 0) ? det : Int(-det);
  }
  return out;
}

}  // namespace logfan
