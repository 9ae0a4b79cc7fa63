#include "logfan/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace logfan {

namespace {

void sort_unique(std::vector<Vec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Solve the square rational system a λ = b by Gaussian elimination.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw PreconditionError("solve_square: singular system");
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) b[k] /= a[k][k];
  return b;
}

// Primitive integer multiple of g - proj_L(g), where L is spanned by `basis`.
Vec project_off(const Vec& g, const std::vector<Vec>& basis) {
  if (basis.empty()) return g;
  const std::size_t l = basis.size();
  std::vector<std::vector<Rational>> gram(l, std::vector<Rational>(l));
  std::vector<Rational> rhs(l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) gram[i][j] = Rational(dot(basis[i], basis[j]));
    rhs[i] = Rational(dot(basis[i], g));
  }
  std::vector<Rational> lambda = solve_square(std::move(gram), std::move(rhs));
  std::vector<Rational> x(g.begin(), g.end());
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < g.size(); ++j) x[j] -= lambda[i] * Rational(basis[i][j]);
  Int den = 1;
  for (const Rational& q : x) den = lcm(den, q.get_den());
  Vec out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) out[j] = x[j].get_num() * (den / x[j].get_den());
  return primitive(out);
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Cone::Cone(std::size_t ambient_rank) : rank_(ambient_rank) {
  equations_ = kernel_basis(IntMatrix(0, ambient_rank));
}

Cone Cone::from_generators(std::size_t n, const std::vector<Vec>& generators) {
  std::vector<Vec> gens;
  for (const Vec& g : generators) {
    if (g.size() != n) throw DimensionError("Cone: generator " + to_string(g) + " not in Z^" + std::to_string(n));
    if (!logfan::is_zero(g)) gens.push_back(primitive(g));
  }
  sort_unique(gens);
  Cone c(n);
  if (gens.empty()) return c;

  c.equations_ = kernel_basis(IntMatrix::from_rows(gens, n));
  const std::size_t d = n - c.equations_.size();

  // A facet is spanned by d-1 independent generators; its normal is the
  // one-dimensional kernel of those generators together with the equations.
  std::vector<Vec> normals;
  for_each_subset(gens.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec> rows;
    rows.reserve(n - 1);
    for (std::size_t i : idx) rows.push_back(gens[i]);
    for (const Vec& e : c.equations_) rows.push_back(e);
    Vec m = cross_product(rows, n);
    if (logfan::is_zero(m)) return;
    m = primitive(m);
    bool pos = false, negative = false;
    for (const Vec& g : gens) {
      int s = sgn(dot(m, g));
      if (s > 0) pos = true;
      if (s < 0) negative = true;
      if (pos && negative) return;
    }
    normals.push_back(negative ? neg(m) : m);
  });
  sort_unique(normals);
  c.facets_ = std::move(normals);

  std::vector<Vec> cut = c.facets_;
  cut.insert(cut.end(), c.equations_.begin(), c.equations_.end());
  c.lineality_ = kernel_basis(IntMatrix::from_rows(cut, n));
  if (c.facets_.empty()) return c;

  const std::size_t target = n - c.lineality_.size() - 1;
  std::set<std::vector<std::size_t>> seen;
  for (const Vec& g : gens) {
    std::vector<std::size_t> zero_set;
    std::vector<Vec> rows = c.equations_;
    for (std::size_t i = 0; i < c.facets_.size(); ++i)
      if (dot(c.facets_[i], g) == 0) {
        zero_set.push_back(i);
        rows.push_back(c.facets_[i]);
      }
    if (zero_set.size() == c.facets_.size()) continue;  // g in the lineality space
    if (rank(rows, n) != target) continue;
    if (!seen.insert(zero_set).second) continue;
    c.rays_.push_back(project_off(g, c.lineality_));
  }
  sort_unique(c.rays_);
  return c;
}

Cone Cone::from_inequalities(std::size_t n, const std::vector<Vec>& inequalities,
                             const std::vector<Vec>& equations) {
  std::vector<Vec> gens = inequalities;
  for (const Vec& e : equations) {
    gens.push_back(e);
    gens.push_back(neg(e));
  }
  return from_generators(n, gens).dual();
}

bool Cone::contains(const Vec& v) const {
  if (v.size() != rank_) throw DimensionError("Cone::contains: vector " + to_string(v) + " not in Z^" + std::to_string(rank_));
  for (const Vec& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const Vec& m : facets_)
    if (dot(m, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_) throw DimensionError("Cone::contains: ambient ranks differ");
  for (const Vec& r : other.rays_)
    if (!contains(r)) return false;
  for (const Vec& l : other.lineality_)
    if (!contains(l) || !contains(neg(l))) return false;
  return true;
}

Vec Cone::interior_point() const {
  Vec s = zero_vec(rank_);
  for (const Vec& r : rays_) s = add(s, r);
  return s;
}

Cone Cone::dual() const {
  Cone d(rank_);
  d.rays_ = facets_;
  d.facets_ = rays_;
  d.lineality_ = equations_;
  d.equations_ = lineality_;
  return d;
}

std::vector<Vec> Cone::generators() const {
  std::vector<Vec> g = rays_;
  for (const Vec& l : lineality_) {
    g.push_back(l);
    g.push_back(neg(l));
  }
  return g;
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.rays_.size() != b.rays_.size()) return a.rays_.size() < b.rays_.size();
  if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
  return a.lineality_ < b.lineality_;
}

std::string Cone::str() const {
  std::string s = "Cone(";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) s += ",";
    s += to_string(rays_[i]);
  }
  s += ")";
  if (!lineality_.empty()) {
    s += "+span(";
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (i) s += ",";
      s += to_string(lineality_[i]);
    }
    s += ")";
  }
  return s;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("intersect: ambient ranks differ");
  std::vector<Vec> ineq = a.facet_normals();
  ineq.insert(ineq.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<Vec> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_rank(), ineq, eq);
}

std::vector<Cone> facets(const Cone& c) {
  std::vector<Cone> out;
  for (const Vec& m : c.facet_normals()) {
    std::vector<Vec> gens;
    for (const Vec& r : c.rays())
      if (dot(m, r) == 0) gens.push_back(r);
    for (const Vec& l : c.lineality_basis()) {
      gens.push_back(l);
      gens.push_back(neg(l));
    }
    out.push_back(Cone::from_generators(c.ambient_rank(), gens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cone> faces(const Cone& c) {
  std::set<Cone> found{c};
  std::vector<Cone> queue{c};
  while (!queue.empty()) {
    Cone cur = std::move(queue.back());
    queue.pop_back();
    for (Cone& f : facets(cur))
      if (found.insert(f).second) queue.push_back(std::move(f));
  }
  return {found.begin(), found.end()};
}

bool is_face_of(const Cone& face, const Cone& c) {
  if (face.ambient_rank() != c.ambient_rank()) throw DimensionError("is_face_of: ambient ranks differ");
  if (face.lineality_basis() != c.lineality_basis()) return false;
  if (!c.contains(face)) return false;
  std::vector<const Vec*> vanishing;
  for (const Vec& m : c.facet_normals()) {
    bool all_zero = std::all_of(face.rays().begin(), face.rays().end(),
                                [&](const Vec& r) { return dot(m, r) == 0; });
    if (all_zero) vanishing.push_back(&m);
  }
  std::vector<Vec> on_face;
  for (const Vec& r : c.rays()) {
    bool on = std::all_of(vanishing.begin(), vanishing.end(),
                          [&](const Vec* m) { return dot(*m, r) == 0; });
    if (on) on_face.push_back(r);
  }
  return on_face == face.rays();
}

Int lattice_index(const std::vector<Vec>& rays, std::size_t n) {
  if (rays.empty()) return 1;
  std::vector<Vec> basis = saturate_lattice(rays, n);
  if (basis.size() != rays.size()) throw PreconditionError("lattice_index: rays are dependent");
  IntMatrix m(rays.size(), rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    auto c = coordinates_in(basis, rays[i]);
    for (std::size_t j = 0; j < rays.size(); ++j) m(i, j) = (*c)[j];
  }
  return abs_det(m);
}

std::vector<Vec> parallelepiped_points(const std::vector<Vec>& rays, std::size_t n) {
  if (rays.empty()) return {zero_vec(n)};
  const std::size_t k = rays.size();
  std::vector<Vec> basis = saturate_lattice(rays, n);
  if (basis.size() != k) throw PreconditionError("parallelepiped_points: rays are dependent");
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = coordinates_in(basis, rays[i]);
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*c)[j];
  }
  SmithForm s = snf(m);
  IntMatrix v_inv = unimodular_inverse(s.v);
  std::vector<Int> moduli(k);
  for (std::size_t i = 0; i < k; ++i) moduli[i] = s.d(i, i);

  std::vector<Vec> out;
  Vec z(k, Int(0));
  for (;;) {
    // y = z V^{-1}, x = y B
    Vec y(k, Int(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) y[j] += z[i] * v_inv(i, j);
    Vec x = zero_vec(n);
    for (std::size_t i = 0; i < k; ++i) x = add(x, scale(y[i], basis[i]));
    auto lambda = rational_coordinates(rays, x);
    std::vector<Rational> acc(n, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = (*lambda)[i];
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), f.get_num_mpz_t(), f.get_den_mpz_t());
      f -= fl;
      for (std::size_t j = 0; j < n; ++j) acc[j] += f * Rational(rays[i][j]);
    }
    Vec p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = acc[j].get_num();
    out.push_back(std::move(p));

    std::size_t pos = 0;
    while (pos < k) {
      ++z[pos];
      if (z[pos] < moduli[pos]) break;
      z[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  sort_unique(out);
  return out;
}

std::vector<std::vector<Vec>> triangulate(const Cone& c) {
  if (!c.is_strictly_convex()) throw PreconditionError("triangulate: cone has lineality");
  if (c.is_zero()) return {{}};
  if (c.is_simplicial()) return {c.rays()};
  const Vec& apex = c.rays().front();
  std::vector<std::vector<Vec>> out;
  for (const Cone& f : facets(c)) {
    if (f.contains(apex)) continue;
    for (std::vector<Vec>& s : triangulate(f)) {
      s.push_back(apex);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Vec> hilbert_basis(const Cone& c) {
  if (!c.is_strictly_convex())
    throw PreconditionError("hilbert_basis: cone " + c.str() + " is not strictly convex");
  if (c.is_zero()) return {};
  std::vector<Vec> candidates = c.rays();
  for (const std::vector<Vec>& simplex : triangulate(c))
    for (Vec& p : parallelepiped_points(simplex, c.ambient_rank()))
      if (!logfan::is_zero(p)) candidates.push_back(std::move(p));
  sort_unique(candidates);

  // Any reducible x has an irreducible summand, and the irreducibles all lie
  // in the candidate set.
  std::vector<Vec> basis;
  for (const Vec& x : candidates) {
    bool reducible = false;
    for (const Vec& y : candidates) {
      if (y == x) continue;
      if (c.contains(sub(x, y))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

std::vector<Vec> lattice_point_generators(const Cone& c) {
  if (c.is_strictly_convex()) return hilbert_basis(c);
  QuotientMap q = quotient_map(c.lineality_basis(), c.ambient_rank());
  std::vector<Vec> out;
  for (const Vec& h : hilbert_basis(image(q.projection, c))) out.push_back(q.lift(h));
  for (const Vec& l : c.lineality_basis()) {
    out.push_back(l);
    out.push_back(neg(l));
  }
  return out;
}

bool is_smooth(const Cone& c) {
  if (!c.is_strictly_convex()) throw PreconditionError("is_smooth: cone " + c.str() + " is not strictly convex");
  if (c.rays().size() != c.dim()) return false;
  if (c.rays().empty()) return true;
  SmithForm s = snf(IntMatrix::from_rows(c.rays(), c.ambient_rank()));
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d(i, i) != 1) return false;
  return true;
}

Cone image(const IntMatrix& map, const Cone& c) {
  if (map.cols() != c.ambient_rank()) throw DimensionError("image: map does not start at the cone's lattice");
  std::vector<Vec> gens;
  for (const Vec& g : c.generators()) gens.push_back(map.apply(g));
  return Cone::from_generators(map.rows(), gens);
}

Cone preimage(const IntMatrix& map, const Cone& c) {
  if (map.rows() != c.ambient_rank()) throw DimensionError("preimage: map does not end at the cone's lattice");
  IntMatrix t = map.transpose();
  std::vector<Vec> ineq, eq;
  for (const Vec& m : c.facet_normals()) ineq.push_back(t.apply(m));
  for (const Vec& e : c.equations()) eq.push_back(t.apply(e));
  return Cone::from_inequalities(map.cols(), ineq, eq);
}

}  // namespace logfan
