#include <doctest.h>

#include <random>

#include "logfan/lattice.hpp"

using namespace logfan;

namespace {

// Is x an integer combination of the rows of a? Brute force over a box.
bool in_row_lattice_box(const IntMatrix& a, const Vec& x, long bound) {
  std::vector<long> c(a.rows(), -bound);
  for (;;) {
    Vec s = zero_vec(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) s = add(s, scale(Int(c[i]), a.row(i)));
    if (s == x) return true;
    std::size_t k = 0;
    while (k < c.size() && ++c[k] > bound) c[k++] = -bound;
    if (k == c.size()) return false;
  }
}

Int det_small(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      minor.push_back(r);
    }
    Int t = m[0][j] * det_small(minor);
    d += (j % 2 == 0) ? t : Int(-t);
  }
  return d;
}

// gcd of all k×k minors.
Int determinant_divisor(const IntMatrix& a, std::size_t k) {
  Int g = 0;
  std::vector<std::size_t> ri(k), ci(k);
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t kk = idx.size();
    std::size_t i = kk;
    while (i > 0 && idx[i - 1] == n - kk + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < kk; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  for (std::size_t i = 0; i < k; ++i) ri[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) ci[i] = i;
    do {
      std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a(ri[i], ci[j]);
      g = gcd(g, det_small(m));
    } while (next(ci, a.cols()));
  } while (next(ri, a.rows()));
  return abs(g);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("hnf examples") {
  HermiteForm id = hnf(IntMatrix::identity(2));
  CHECK(id.h == IntMatrix::identity(2));
  CHECK(id.u == IntMatrix::identity(2));

  IntMatrix a{{2, 4}, {0, 3}};
  HermiteForm f = hnf(a);
  CHECK(f.h == IntMatrix{{2, 1}, {0, 3}});
  CHECK(f.u * a == f.h);
  // Oracle: both matrices generate the same row lattice.
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(in_row_lattice_box(a, f.h.row(i), 4));
    CHECK(in_row_lattice_box(f.h, a.row(i), 4));
  }

  CHECK(hnf(IntMatrix{{0, 0}}).h == IntMatrix{{0, 0}});
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).d == IntMatrix{{1, 0}, {0, 6}});
  CHECK(snf(IntMatrix{{2, 0}, {0, 2}}).d == IntMatrix{{2, 0}, {0, 2}});
  IntMatrix a{{1, 2}, {3, 4}};
  SmithForm s = snf(a);
  CHECK(s.d == IntMatrix{{1, 0}, {0, 2}});
  CHECK(determinant_divisor(a, 1) == 1);
  CHECK(determinant_divisor(a, 2) == 2);
}

TEST_CASE("kernel and cokernel examples") {
  CHECK(kernel_basis(IntMatrix{{1, 1}}) == std::vector<Vec>{make_vec({1, -1})});
  CHECK(kernel_basis(IntMatrix{{2, 0}, {0, 3}}).empty());
  std::vector<Vec> k = kernel_basis(IntMatrix{{2, 4}});
  REQUIRE(k.size() == 1);
  // Minor formula for a 1×2 map (a b): kernel generated by (b, -a)/gcd.
  CHECK((k[0] == make_vec({2, -1}) || k[0] == make_vec({-2, 1})));

  IntMatrix times5{{5}};
  CHECK(cokernel(times5) == AbelianQuotient{0, {Int(5)}});
  CHECK(cokernel(IntMatrix(2, 1)) == AbelianQuotient{2, {}});
  CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == AbelianQuotient{0, {Int(6)}});
}

TEST_CASE("normal form properties on random matrices") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, -6, 6);

    HermiteForm h = hnf(a);
    CHECK(is_unimodular(h.u));
    CHECK(h.u * a == h.h);
    CHECK(h.rank == rank(a));
    // echelon shape with positive pivots, reduced above
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t i = 0; i < h.rank; ++i) {
      std::size_t p = 0;
      while (h.h(i, p) == 0) ++p;
      CHECK(h.h(i, p) > 0);
      if (!first) CHECK(p > prev);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.h(k, p) >= 0);
        CHECK(h.h(k, p) < h.h(i, p));
      }
      prev = p;
      first = false;
    }
    for (std::size_t i = h.rank; i < r; ++i) CHECK(is_zero(h.h.row(i)));

    SmithForm s = snf(a);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK(s.u * a * s.v == s.d);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    std::size_t m = std::min(r, c);
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (s.d(i + 1, i + 1) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);

    // determinant divisors: product of the first k invariant factors
    Int prod = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      prod *= s.d(k - 1, k - 1);
      CHECK(determinant_divisor(a, k) == prod);
    }

    std::vector<Vec> ker = kernel_basis(a);
    CHECK(ker.size() == c - rank(a));
    for (const Vec& v : ker) CHECK(is_zero(a.apply(v)));

    AbelianQuotient q = cokernel(a);
    CHECK(q.free_rank == r - rank(a));
    for (std::size_t i = 0; i + 1 < q.invariant_factors.size(); ++i)
      CHECK(q.invariant_factors[i + 1] % q.invariant_factors[i] == 0);
    if (r == c && rank(a) == r) {
      Int p = 1;
      for (const Int& d : q.invariant_factors) p *= d;
      CHECK(p == abs_det(a));
    }
  }
}

TEST_CASE("kernel is saturated") {
  // Every integer solution in a box is an integer combination of the basis.
  IntMatrix a{{2, 4, 6}};
  std::vector<Vec> ker = kernel_basis(a);
  REQUIRE(ker.size() == 2);
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y)
      for (long z = -4; z <= 4; ++z) {
        Vec v = make_vec({x, y, z});
        if (is_zero(a.apply(v))) CHECK(coordinates_in(ker, v).has_value());
      }
}

TEST_CASE("quotient map") {
  QuotientMap q = quotient_map({make_vec({2, 0})}, 2);
  CHECK(q.projection.rows() == 1);
  CHECK(q.torsion == std::vector<Int>{2});
  CHECK(is_zero(q.apply(make_vec({1, 0}))));
  CHECK(q.apply(q.lift(make_vec({3}))) == make_vec({3}));
}

TEST_CASE("cross product") {
  Vec c = cross_product({make_vec({1, 0, 0}), make_vec({0, 1, 0})}, 3);
  CHECK(dot(c, make_vec({1, 0, 0})) == 0);
  CHECK(dot(c, make_vec({0, 1, 0})) == 0);
  CHECK(abs(c[2]) == 1);
  CHECK(!is_zero(cross_product({make_vec({1, 2})}, 2)));
  CHECK(is_zero(cross_product({make_vec({1, 1, 0}), make_vec({2, 2, 0})}, 3)));
}

TEST_CASE("saturate lattice and coordinates") {
  std::vector<Vec> b = saturate_lattice({make_vec({2, 2})}, 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == make_vec({1, 1}));
  CHECK(!coordinates_in(lattice_basis({make_vec({2, 0}), make_vec({0, 1})}, 2), make_vec({1, 0})).has_value());
  auto rc = rational_coordinates({make_vec({2, 0})}, make_vec({1, 0}));
  REQUIRE(rc.has_value());
  CHECK((*rc)[0] == Rational(1, 2));
}
