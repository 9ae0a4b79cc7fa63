#include "logfan/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace logfan {

namespace {

constexpr std::size_t kMaxVolumeRank = 4;

bool rays_subset(const Cone& small, const Cone& big) {
  return std::includes(big.rays().begin(), big.rays().end(), small.rays().begin(), small.rays().end());
}

std::vector<Cone> cone_faces(const Cone& c) {
  if (!c.is_simplicial()) return faces(c);
  const std::vector<Vec>& r = c.rays();
  std::vector<Cone> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r.size()); ++mask) {
    std::vector<Vec> g;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (mask & (std::size_t{1} << i)) g.push_back(r[i]);
    out.push_back(Cone::from_generators(c.ambient_rank(), g));
  }
  return out;
}

bool is_square_unimodular(const IntMatrix& m) { return m.rows() == m.cols() && is_unimodular(m); }

Rational normalized_volume(const Cone& piece, const Vec& ell) {
  Rational v = 0;
  for (const std::vector<Vec>& simplex : triangulate(piece)) {
    Int denom = 1;
    for (const Vec& r : simplex) denom *= dot(ell, r);
    Rational term(lattice_index(simplex, piece.ambient_rank()), denom);
    term.canonicalize();
    v += term;
  }
  return v;
}

// σ ⊆ union of `cones`, where the pieces cone ∩ σ of full dimension in σ
// have pairwise disjoint relative interiors once duplicates are removed.
bool covers(const std::vector<Cone>& cones, const Cone& sigma) {
  const std::size_t d = sigma.dim();
  if (d == 0) return !cones.empty();
  Vec ell = zero_vec(sigma.ambient_rank());
  for (const Vec& m : sigma.facet_normals()) ell = add(ell, m);
  std::set<Cone> pieces;
  for (const Cone& c : cones) {
    Cone p = intersect(c, sigma);
    if (p.dim() == d) pieces.insert(std::move(p));
  }
  Rational total = 0;
  for (const Cone& p : pieces) total += normalized_volume(p, ell);
  return total == normalized_volume(sigma, ell);
}

void require_rank(const Fan& fan, std::size_t rank, const char* what) {
  if (fan.ambient_rank() != rank)
    throw DimensionError(std::string(what) + ": fan lives in Z^" + std::to_string(fan.ambient_rank()) +
                         ", expected Z^" + std::to_string(rank));
}

Int cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }
int half2(const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }
bool angle_less(const Vec& a, const Vec& b) {
  int ha = half2(a), hb = half2(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

}  // namespace

Fan::Fan(std::size_t ambient_rank, std::vector<Cone> cones) : rank_(ambient_rank) {
  for (const Cone& c : cones) {
    if (c.ambient_rank() != rank_) throw DimensionError("Fan: cone " + c.str() + " not in Z^" + std::to_string(rank_));
    if (!c.is_strictly_convex()) throw PreconditionError("Fan: cone " + c.str() + " is not strictly convex");
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  std::stable_sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) { return a.dim() > b.dim(); });
  for (Cone& c : cones) {
    bool is_face = std::any_of(max_.begin(), max_.end(), [&](const Cone& big) {
      return big.dim() > c.dim() && rays_subset(c, big) && is_face_of(c, big);
    });
    if (!is_face) max_.push_back(std::move(c));
  }
  std::sort(max_.begin(), max_.end());
}

Fan Fan::from_rays(std::size_t ambient_rank, const std::vector<std::vector<Vec>>& cones) {
  std::vector<Cone> c;
  for (const auto& rays : cones) c.push_back(Cone::from_generators(ambient_rank, rays));
  return Fan(ambient_rank, std::move(c));
}

std::vector<Cone> Fan::all_cones() const {
  std::set<Cone> out;
  for (const Cone& c : max_)
    for (Cone& f : cone_faces(c)) out.insert(std::move(f));
  return {out.begin(), out.end()};
}

std::vector<Cone> Fan::cones_of_dim(std::size_t d) const {
  std::vector<Cone> out;
  for (Cone& c : all_cones())
    if (c.dim() == d) out.push_back(std::move(c));
  return out;
}

std::vector<Vec> Fan::rays() const {
  std::set<Vec> out;
  for (const Cone& c : max_) out.insert(c.rays().begin(), c.rays().end());
  return {out.begin(), out.end()};
}

bool Fan::has_cone(const Cone& c) const {
  return std::any_of(max_.begin(), max_.end(),
                     [&](const Cone& big) { return rays_subset(c, big) && is_face_of(c, big); });
}

bool Fan::contains(const Vec& v) const {
  return std::any_of(max_.begin(), max_.end(), [&](const Cone& c) { return c.contains(v); });
}

bool operator<(const Fan& a, const Fan& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  return a.max_ < b.max_;
}

std::string Fan::str() const {
  std::string s = "Fan{";
  for (std::size_t i = 0; i < max_.size(); ++i) {
    if (i) s += ", ";
    s += max_[i].str();
  }
  return s + "}";
}

std::string FanReport::str() const {
  if (valid) return "valid fan";
  std::string s;
  for (const FanViolation& v : violations)
    s += "cones " + v.first.str() + " and " + v.second.str() + " meet in " + v.intersection.str() +
         ", which is not a common face\n";
  return s;
}

FanReport validate(const Fan& fan) {
  FanReport report;
  const std::vector<Cone>& m = fan.max_cones();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Cone x = intersect(m[i], m[j]);
      if (!is_face_of(x, m[i]) || !is_face_of(x, m[j])) {
        report.valid = false;
        report.violations.push_back({m[i], m[j], x});
      }
    }
  return report;
}

bool is_complete(const Fan& fan) {
  bool walls = !fan.empty();
  std::map<Cone, int> ridges;
  for (const Cone& c : fan.max_cones()) {
    if (!c.is_full_dimensional()) walls = false;
    for (Cone& f : facets(c)) ++ridges[std::move(f)];
  }
  for (const auto& [ridge, count] : ridges)
    if (count != 2) walls = false;

  if (walls && fan.ambient_rank() > 0) {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<long> d(-64, 64);
    for (int i = 0; i < 500; ++i) {
      Vec v(fan.ambient_rank());
      for (auto& x : v) x = d(rng);
      if (!fan.contains(v))
        throw Error("is_complete: wall criterion holds but " + to_string(v) + " is outside " + fan.str());
    }
  }
  return walls;
}

bool is_fan_map(const IntMatrix& map, const Fan& source, const Fan& target) {
  if (map.cols() != source.ambient_rank() || map.rows() != target.ambient_rank())
    throw DimensionError("is_fan_map: matrix shape does not match the fans");
  for (const Cone& c : source.max_cones()) {
    Cone img = image(map, c);
    bool inside = std::any_of(target.max_cones().begin(), target.max_cones().end(),
                              [&](const Cone& t) { return t.contains(img); });
    if (!inside) return false;
  }
  return true;
}

SubdivisionReport subdivision_predicates(const IntMatrix& map, const Fan& source, const Fan& target) {
  if (!is_fan_map(map, source, target)) throw PreconditionError("subdivision_predicates: not a fan map");
  if (std::max(source.ambient_rank(), target.ambient_rank()) > kMaxVolumeRank)
    throw PreconditionError("subdivision_predicates: ambient rank above " + std::to_string(kMaxVolumeRank));
  SubdivisionReport r;
  r.is_partial_subdivision = is_square_unimodular(map);
  if (!r.is_partial_subdivision) return r;
  std::vector<Cone> images;
  for (const Cone& c : source.max_cones()) images.push_back(image(map, c));
  r.is_subdivision = std::all_of(target.max_cones().begin(), target.max_cones().end(),
                                 [&](const Cone& s) { return covers(images, s); });
  return r;
}

bool same_support(const Fan& a, const Fan& b) {
  require_rank(b, a.ambient_rank(), "same_support");
  if (a.ambient_rank() > kMaxVolumeRank)
    throw PreconditionError("same_support: ambient rank above " + std::to_string(kMaxVolumeRank));
  auto one_way = [](const Fan& x, const Fan& y) {
    return std::all_of(y.max_cones().begin(), y.max_cones().end(),
                       [&](const Cone& s) { return covers(x.max_cones(), s); });
  };
  return one_way(a, b) && one_way(b, a);
}

Fan star_subdivision(const Fan& fan, const Cone& tau) {
  if (tau.ambient_rank() != fan.ambient_rank()) throw DimensionError("star_subdivision: τ in the wrong lattice");
  if (tau.is_zero()) throw PreconditionError("star_subdivision: τ is the zero cone");
  if (!fan.has_cone(tau)) throw PreconditionError("star_subdivision: " + tau.str() + " is not a cone of the fan");
  const Vec center = tau.interior_point();
  std::vector<Cone> out;
  for (const Cone& sigma : fan.max_cones()) {
    if (!sigma.contains(tau)) {
      out.push_back(sigma);
      continue;
    }
    if (!is_smooth(sigma)) throw PreconditionError("star_subdivision: " + sigma.str() + " contains τ and is not smooth");
    for (const Vec& a : tau.rays()) {
      std::vector<Vec> gens;
      for (const Vec& r : sigma.rays())
        if (r != a) gens.push_back(r);
      gens.push_back(center);
      out.push_back(Cone::from_generators(fan.ambient_rank(), gens));
    }
  }
  return Fan(fan.ambient_rank(), std::move(out));
}

Fan stellar_subdivision(const Fan& fan, const Vec& v) {
  if (v.size() != fan.ambient_rank()) throw DimensionError("stellar_subdivision: vector in the wrong lattice");
  if (logfan::is_zero(v)) throw PreconditionError("stellar_subdivision: zero center");
  if (!fan.contains(v)) throw PreconditionError("stellar_subdivision: " + to_string(v) + " is outside the support");
  const Vec p = primitive(v);
  std::vector<Cone> out;
  for (const Cone& sigma : fan.max_cones()) {
    if (!sigma.contains(p)) {
      out.push_back(sigma);
      continue;
    }
    for (const Cone& g : facets(sigma)) {
      if (g.contains(p)) continue;
      std::vector<Vec> gens = g.rays();
      gens.push_back(p);
      out.push_back(Cone::from_generators(fan.ambient_rank(), gens));
    }
  }
  return Fan(fan.ambient_rank(), std::move(out));
}

Fan fiber_product(const IntMatrix& map1, const Fan& fan1, const IntMatrix& map2, const Fan& fan2, const Fan& base) {
  if (!is_fan_map(map1, fan1, base) || !is_fan_map(map2, fan2, base))
    throw PreconditionError("fiber_product: a leg is not a fan map");
  const IntMatrix* sub_map = nullptr;
  const Fan* sub_fan = nullptr;
  const IntMatrix* other_map = nullptr;
  const Fan* other_fan = nullptr;
  if (is_square_unimodular(map1)) {
    sub_map = &map1, sub_fan = &fan1, other_map = &map2, other_fan = &fan2;
  } else if (is_square_unimodular(map2)) {
    sub_map = &map2, sub_fan = &fan2, other_map = &map1, other_fan = &fan1;
  } else {
    throw PreconditionError("fiber_product: neither leg is a partial subdivision");
  }
  std::vector<Cone> out;
  for (const Cone& t : sub_fan->max_cones()) {
    Cone pulled = preimage(*other_map, image(*sub_map, t));
    for (const Cone& s : other_fan->max_cones()) out.push_back(intersect(pulled, s));
  }
  return Fan(other_fan->ambient_rank(), std::move(out));
}

Fan product_fan(const Fan& a, const Fan& b) {
  const std::size_t na = a.ambient_rank(), nb = b.ambient_rank();
  std::vector<Cone> out;
  for (const Cone& x : a.max_cones())
    for (const Cone& y : b.max_cones()) {
      std::vector<Vec> gens;
      for (const Vec& r : x.rays()) {
        Vec v = r;
        v.resize(na + nb, Int(0));
        gens.push_back(v);
      }
      for (const Vec& r : y.rays()) {
        Vec v(na, Int(0));
        v.insert(v.end(), r.begin(), r.end());
        gens.push_back(v);
      }
      out.push_back(Cone::from_generators(na + nb, gens));
    }
  return Fan(na + nb, std::move(out));
}

Fan fan_union(const Fan& a, const Fan& b) {
  require_rank(b, a.ambient_rank(), "fan_union");
  std::vector<Cone> c = a.max_cones();
  c.insert(c.end(), b.max_cones().begin(), b.max_cones().end());
  return Fan(a.ambient_rank(), std::move(c));
}

Fan fan_intersection(const Fan& a, const Fan& b) {
  require_rank(b, a.ambient_rank(), "fan_intersection");
  std::vector<Cone> common;
  for (Cone& c : a.all_cones())
    if (b.has_cone(c)) common.push_back(std::move(c));
  return Fan(a.ambient_rank(), std::move(common));
}

Fan complete_2d(const Fan& fan) {
  require_rank(fan, 2, "complete_2d");
  FanReport report = validate(fan);
  if (!report.valid) throw PreconditionError("complete_2d: input is not a fan: " + report.str());
  std::vector<Cone> cones;
  for (const Cone& c : fan.max_cones())
    if (!c.is_zero()) cones.push_back(c);
  std::vector<Vec> rays = fan.rays();
  std::set<Cone> two_cones;
  for (const Cone& c : cones)
    if (c.dim() == 2) two_cones.insert(c);
  auto add_ray = [&](const Vec& v) {
    rays.push_back(v);
    cones.push_back(Cone::from_generators(2, {v}));
  };
  if (rays.empty()) add_ray(make_vec({1, 0}));

  for (;;) {
    std::sort(rays.begin(), rays.end(), angle_less);
    if (rays.size() == 1) {
      add_ray(neg(rays[0]));
      continue;
    }
    bool acted = false;
    for (std::size_t i = 0; i < rays.size() && !acted; ++i) {
      const Vec& a = rays[i];
      const Vec& b = rays[(i + 1) % rays.size()];
      Int c = cross2(a, b);
      if (c > 0) {
        Cone ab = Cone::from_generators(2, {a, b});
        if (two_cones.count(ab)) continue;
        two_cones.insert(ab);
        cones.push_back(ab);
      } else if (c == 0) {
        add_ray(Vec{-a[1], a[0]});
      } else {
        add_ray(neg(a));
      }
      acted = true;
    }
    if (!acted) break;
  }
  return Fan(2, std::move(cones));
}

Resolution resolve_2d(const Fan& fan) {
  require_rank(fan, 2, "resolve_2d");
  FanReport report = validate(fan);
  if (!report.valid) throw PreconditionError("resolve_2d: input is not a fan: " + report.str());
  Resolution res{fan, {}, {}};
  for (;;) {
    const Cone* singular = nullptr;
    for (const Cone& c : res.fan.max_cones())
      if (!is_smooth(c)) {
        singular = &c;
        break;
      }
    if (!singular) break;
    Vec center;
    for (const Vec& h : hilbert_basis(*singular))
      if (!std::binary_search(singular->rays().begin(), singular->rays().end(), h)) {
        center = h;
        break;
      }
    Fan next = stellar_subdivision(res.fan, center);
    res.centers.push_back(center);
    res.intermediates.push_back(next);
    res.fan = std::move(next);
  }
  return res;
}

bool is_smooth(const Fan& fan) {
  return std::all_of(fan.max_cones().begin(), fan.max_cones().end(), [](const Cone& c) { return is_smooth(c); });
}

std::optional<std::vector<Cone>> search_refinement(const Fan& fan, const Fan& goal, std::size_t depth) {
  require_rank(goal, fan.ambient_rank(), "search_refinement");
  if (!is_smooth(fan) || !is_smooth(goal)) throw PreconditionError("search_refinement: fans must be smooth");
  if (!same_support(fan, goal)) throw PreconditionError("search_refinement: supports differ");
  const IntMatrix id = IntMatrix::identity(fan.ambient_rank());
  auto refines_goal = [&](const Fan& f) { return is_fan_map(id, f, goal); };
  if (refines_goal(fan)) return std::vector<Cone>{};

  struct Node {
    Fan fan;
    std::vector<Cone> steps;
  };
  std::set<Fan> visited{fan};
  std::vector<Node> frontier{{fan, {}}};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (const Cone& tau : node.fan.cones_of_dim(2)) {
        Fan f = star_subdivision(node.fan, tau);
        if (!visited.insert(f).second) continue;
        std::vector<Cone> steps = node.steps;
        steps.push_back(tau);
        if (refines_goal(f)) return steps;
        next.push_back({std::move(f), std::move(steps)});
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace logfan
