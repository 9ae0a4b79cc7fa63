#include "logfan/monoid.hpp"

#include <algorithm>
#include <set>

namespace logfan {

namespace {

// Coordinates of the rows of `vectors` in `basis` (all assumed to lie in its span).
std::vector<Vec> coordinates_all(const std::vector<Vec>& basis, const std::vector<Vec>& vectors) {
  std::vector<Vec> out;
  out.reserve(vectors.size());
  for (const Vec& v : vectors) {
    auto c = coordinates_in(basis, v);
    if (!c) throw Error("coordinates_all: " + to_string(v) + " not in the lattice");
    out.push_back(std::move(*c));
  }
  return out;
}

Vec from_coordinates(const std::vector<Vec>& basis, const Vec& c, std::size_t n) {
  Vec x = zero_vec(n);
  for (std::size_t i = 0; i < basis.size(); ++i) x = add(x, scale(c[i], basis[i]));
  return x;
}

bool in_lattice(const std::vector<Vec>& basis, const Vec& x) {
  if (logfan::is_zero(x)) return true;
  return coordinates_in(basis, x).has_value();
}

class MembershipSearch {
 public:
  MembershipSearch(const AffineMonoid& p) : cone_(p.cone()) {
    ell_ = zero_vec(p.ambient_rank());
    for (const Vec& m : cone_.facet_normals()) ell_ = add(ell_, m);
    std::vector<Vec> units;
    for (const Vec& g : p.generators()) {
      if (dot(ell_, g) == 0)
        units.push_back(g);
      else
        steps_.push_back(g);
    }
    units_ = lattice_basis(units, p.ambient_rank());
  }

  bool run(const Vec& x) {
    if (dot(ell_, x) == 0) return in_lattice(units_, x);
    if (failed_.count(x)) return false;
    for (const Vec& g : steps_) {
      Vec y = sub(x, g);
      if (dot(ell_, y) < 0 || !cone_.contains(y)) continue;
      if (run(y)) return true;
    }
    failed_.insert(x);
    return false;
  }

 private:
  Cone cone_;
  Vec ell_;  // sum of facet normals: positive on every non-unit generator
  std::vector<Vec> steps_;
  std::vector<Vec> units_;
  std::set<Vec> failed_;
};

void require_face(const AffineMonoid& p, const AffineMonoid& f, const char* what) {
  if (!is_face(p, f)) throw PreconditionError(std::string(what) + ": " + f.str() + " is not a face of " + p.str());
}

}  // namespace

AffineMonoid::AffineMonoid(std::size_t ambient_rank, std::vector<Vec> generators) : rank_(ambient_rank) {
  for (Vec& g : generators) {
    if (g.size() != rank_)
      throw DimensionError("AffineMonoid: generator " + to_string(g) + " not in Z^" + std::to_string(rank_));
    if (!logfan::is_zero(g)) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

std::string AffineMonoid::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += to_string(gens_[i]);
  }
  return s + ">";
}

bool membership(const AffineMonoid& p, const Vec& x) {
  if (x.size() != p.ambient_rank())
    throw DimensionError("membership: " + to_string(x) + " not in Z^" + std::to_string(p.ambient_rank()));
  if (p.ambient_rank() > kMaxMonoidRank || p.generators().size() > kMaxMonoidGenerators)
    throw PreconditionError("membership: monoid " + p.str() + " exceeds the supported size");
  if (logfan::is_zero(x)) return true;
  if (!in_lattice(group_completion(p), x)) return false;
  if (!p.cone().contains(x)) return false;
  return MembershipSearch(p).run(x);
}

std::vector<Vec> group_completion(const AffineMonoid& p) {
  return lattice_basis(p.generators(), p.ambient_rank());
}

AffineMonoid saturation(const AffineMonoid& p) {
  const std::size_t n = p.ambient_rank();
  std::vector<Vec> basis = group_completion(p);
  if (basis.empty()) return p;
  Cone c = Cone::from_generators(basis.size(), coordinates_all(basis, p.generators()));
  std::vector<Vec> gens;
  for (const Vec& h : lattice_point_generators(c)) gens.push_back(from_coordinates(basis, h, n));
  return AffineMonoid(n, std::move(gens));
}

bool is_saturated(const AffineMonoid& p) {
  AffineMonoid s = saturation(p);
  return std::all_of(s.generators().begin(), s.generators().end(),
                     [&](const Vec& g) { return membership(p, g); });
}

MonoidStructure structure_queries(const AffineMonoid& p) {
  MonoidStructure out;
  out.is_saturated = is_saturated(p);
  Cone c = p.cone();
  std::vector<Vec> unit_gens;
  for (const Vec& g : p.generators())
    if (c.contains(neg(g))) unit_gens.push_back(g);
  out.units = lattice_basis(unit_gens, p.ambient_rank());
  out.is_sharp = out.units.empty();
  out.sharpening_map = quotient_map(out.units, p.ambient_rank());
  std::vector<Vec> images;
  for (const Vec& g : p.generators()) images.push_back(out.sharpening_map.apply(g));
  out.sharpening = AffineMonoid(out.sharpening_map.projection.rows(), std::move(images));
  return out;
}

std::vector<MonoidFace> faces(const AffineMonoid& p) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<MonoidFace> out;
  for (const Cone& tau : faces(p.cone())) {
    MonoidFace f;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < p.generators().size(); ++i)
      if (tau.contains(p.generators()[i])) {
        f.generator_indices.push_back(i);
        gens.push_back(p.generators()[i]);
      }
    if (!seen.insert(f.generator_indices).second) continue;
    f.face = AffineMonoid(p.ambient_rank(), std::move(gens));
    out.push_back(std::move(f));
  }
  return out;
}

bool is_face(const AffineMonoid& p, const AffineMonoid& f) {
  if (f.ambient_rank() != p.ambient_rank()) throw DimensionError("is_face: ambient ranks differ");
  for (const Vec& g : f.generators())
    if (!membership(p, g)) return false;
  // Smallest face of cone(P) containing F; P ∩ τ must be generated by F.
  Cone c = p.cone();
  std::vector<Vec> vanishing;
  for (const Vec& m : c.facet_normals())
    if (std::all_of(f.generators().begin(), f.generators().end(), [&](const Vec& g) { return dot(m, g) == 0; }))
      vanishing.push_back(m);
  for (const Vec& g : p.generators()) {
    bool on_tau = std::all_of(vanishing.begin(), vanishing.end(), [&](const Vec& m) { return dot(m, g) == 0; });
    if (on_tau && !membership(f, g)) return false;
  }
  return true;
}

AffineMonoid localize(const AffineMonoid& p, const AffineMonoid& f) {
  require_face(p, f, "localize");
  std::vector<Vec> gens = p.generators();
  for (const Vec& g : f.generators()) gens.push_back(neg(g));
  return AffineMonoid(p.ambient_rank(), std::move(gens));
}

AffineMonoid quotient(const AffineMonoid& p, const AffineMonoid& f) {
  require_face(p, f, "quotient");
  QuotientMap q = quotient_map(f.generators(), p.ambient_rank());
  std::vector<Vec> images;
  for (const Vec& g : p.generators()) images.push_back(q.apply(g));
  return AffineMonoid(q.projection.rows(), std::move(images));
}

MonoidHom::MonoidHom(AffineMonoid source, AffineMonoid target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.cols() != source_.ambient_rank() || matrix_.rows() != target_.ambient_rank())
    throw DimensionError("MonoidHom: matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.ambient_rank()) +
                         "x" + std::to_string(source_.ambient_rank()));
  for (const Vec& g : source_.generators())
    if (!membership(target_, matrix_.apply(g)))
      throw PreconditionError("MonoidHom: image of " + to_string(g) + " is not in " + target_.str());
}

AffineMonoid amalgamated_sum(const MonoidHom& to_q, const MonoidHom& to_p2, SumMode mode) {
  if (!(to_q.source() == to_p2.source())) throw PreconditionError("amalgamated_sum: legs have different sources");
  const AffineMonoid& q = to_q.target();
  const AffineMonoid& p2 = to_p2.target();
  std::vector<Vec> bq = group_completion(q), bp = group_completion(p2);
  const std::size_t kq = bq.size(), k = kq + bp.size();

  // Work in coordinates of Q^gp ⊕ P'^gp.
  auto embed = [&](const Vec& in_q, const Vec& in_p) {
    Vec v(k, Int(0));
    if (!in_q.empty()) {
      Vec c = *coordinates_in(bq, in_q);
      std::copy(c.begin(), c.end(), v.begin());
    }
    if (!in_p.empty()) {
      Vec c = *coordinates_in(bp, in_p);
      std::copy(c.begin(), c.end(), v.begin() + static_cast<long>(kq));
    }
    return v;
  };
  std::vector<Vec> relations;
  for (const Vec& g : to_q.source().generators()) {
    Vec a = to_q.matrix().apply(g), b = to_p2.matrix().apply(g);
    relations.push_back(sub(embed(a, {}), embed({}, b)));
  }
  QuotientMap qm = quotient_map(relations, k);
  if (!qm.torsion.empty()) throw PreconditionError("amalgamated_sum: pushout group has torsion");
  std::vector<Vec> images;
  for (const Vec& g : q.generators()) images.push_back(qm.apply(embed(g, {})));
  for (const Vec& g : p2.generators()) images.push_back(qm.apply(embed({}, g)));
  AffineMonoid sum(qm.projection.rows(), std::move(images));
  return mode == SumMode::saturated ? saturation(sum) : sum;
}

NthRoot nth_root(const AffineMonoid& p, const Int& n) {
  if (n < 1) throw PreconditionError("nth_root: n must be positive");
  if (!is_saturated(p)) throw PreconditionError("nth_root: " + p.str() + " is not saturated");
  const std::size_t r = p.ambient_rank();
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) m(i, i) = n;
  return NthRoot{p, MonoidHom(p, p, m)};
}

bool is_kummer(const MonoidHom& theta) {
  const AffineMonoid& p = theta.source();
  std::vector<Vec> basis = group_completion(p);
  std::vector<Vec> images;
  for (const Vec& b : basis) images.push_back(theta.matrix().apply(b));
  if (rank(images, theta.target().ambient_rank()) != basis.size()) return false;
  std::vector<Vec> gen_images;
  for (const Vec& g : p.generators()) gen_images.push_back(theta.matrix().apply(g));
  Cone c = Cone::from_generators(theta.target().ambient_rank(), gen_images);
  return std::all_of(theta.target().generators().begin(), theta.target().generators().end(),
                     [&](const Vec& g) { return c.contains(g); });
}

bool is_exact(const MonoidHom& theta) {
  const AffineMonoid& p = theta.source();
  const AffineMonoid& q = theta.target();
  const std::size_t n = p.ambient_rank(), nq = q.ambient_rank();
  std::vector<Vec> bp = group_completion(p);
  const std::size_t k = bp.size();
  // θ' : Z^k (P^gp coordinates) → Z^nq
  std::vector<Vec> theta_cols;
  for (const Vec& b : bp) theta_cols.push_back(theta.matrix().apply(b));

  std::vector<Vec> preimage_gens;  // generators of {x ∈ P^gp : θx ∈ Q}, in P^gp coordinates
  if (is_saturated(q)) {
    // Λ = {x : θ'x ∈ Q^gp}, then intersect with θ'^{-1} cone(Q).
    std::vector<Vec> bq = group_completion(q);
    const std::size_t m = bq.size();
    IntMatrix system(nq, k + m);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < nq; ++i) system(i, j) = theta_cols[j][i];
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < nq; ++i) system(i, k + j) = -bq[j][i];
    std::vector<Vec> lambda_gens;
    for (const Vec& v : kernel_basis(system)) lambda_gens.emplace_back(v.begin(), v.begin() + static_cast<long>(k));
    std::vector<Vec> lambda = lattice_basis(lambda_gens, k);
    if (lambda.empty()) return true;
    IntMatrix to_target(nq, lambda.size());
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      Vec img = zero_vec(nq);
      for (std::size_t t = 0; t < k; ++t) img = add(img, scale(lambda[j][t], theta_cols[t]));
      for (std::size_t i = 0; i < nq; ++i) to_target(i, j) = img[i];
    }
    Cone r = preimage(to_target, q.cone());
    for (const Vec& h : lattice_point_generators(r)) preimage_gens.push_back(from_coordinates(lambda, h, k));
  } else {
    // S = {(x, c) : θ'x = Σ c_j q_j, c ≥ 0}, a saturated monoid; project to x.
    const std::vector<Vec>& qg = q.generators();
    const std::size_t m = qg.size();
    IntMatrix system(nq, k + m);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < nq; ++i) system(i, j) = theta_cols[j][i];
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < nq; ++i) system(i, k + j) = -qg[j][i];
    std::vector<Vec> ker = kernel_basis(system);
    if (ker.empty()) return true;
    std::vector<Vec> ineq;
    for (std::size_t j = 0; j < m; ++j) {
      Vec row(ker.size());
      for (std::size_t t = 0; t < ker.size(); ++t) row[t] = ker[t][k + j];
      ineq.push_back(row);
    }
    Cone s = Cone::from_inequalities(ker.size(), ineq);
    for (const Vec& h : lattice_point_generators(s)) {
      Vec full = from_coordinates(ker, h, k + m);
      preimage_gens.emplace_back(full.begin(), full.begin() + static_cast<long>(k));
    }
  }
  return std::all_of(preimage_gens.begin(), preimage_gens.end(),
                     [&](const Vec& c) { return membership(p, from_coordinates(bp, c, n)); });
}

}  // namespace logfan
