#include "logfan/logpair.hpp"

#include <algorithm>

namespace logfan {

ToricLogPair::ToricLogPair(Fan fan, std::vector<Vec> boundary_rays) : fan_(std::move(fan)) {
  if (!is_smooth(fan_)) throw PreconditionError("ToricLogPair: fan is not smooth");
  const std::vector<Vec> rays = fan_.rays();
  for (Vec& r : boundary_rays) {
    if (r.size() != fan_.ambient_rank()) throw DimensionError("ToricLogPair: boundary ray " + to_string(r) + " in the wrong lattice");
    if (!std::binary_search(rays.begin(), rays.end(), r))
      throw PreconditionError("ToricLogPair: " + to_string(r) + " is not a ray of the fan");
    boundary_.push_back(std::move(r));
  }
  std::sort(boundary_.begin(), boundary_.end());
  boundary_.erase(std::unique(boundary_.begin(), boundary_.end()), boundary_.end());
}

bool ToricLogPair::is_boundary_ray(const Vec& r) const {
  return std::binary_search(boundary_.begin(), boundary_.end(), r);
}

Fan ToricLogPair::boundary_subfan() const {
  std::vector<Cone> cones;
  for (Cone& c : fan_.all_cones())
    if (std::all_of(c.rays().begin(), c.rays().end(), [&](const Vec& r) { return is_boundary_ray(r); }))
      cones.push_back(std::move(c));
  return Fan(fan_.ambient_rank(), std::move(cones));
}

std::string ToricLogPair::str() const {
  std::string s = fan_.str() + " with boundary {";
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    if (i) s += ",";
    s += to_string(boundary_[i]);
  }
  return s + "}";
}

ToricLogPair box_pair() {
  return ToricLogPair(Fan::from_rays(1, {{make_vec({1})}, {make_vec({-1})}}), {make_vec({-1})});
}

ToricLogPair box_power(std::size_t n) {
  ToricLogPair p(Fan(0, {Cone(0)}), {});
  for (std::size_t i = 0; i < n; ++i) p = product(p, box_pair());
  return p;
}

ToricLogPair product(const ToricLogPair& a, const ToricLogPair& b) {
  const std::size_t na = a.fan().ambient_rank(), nb = b.fan().ambient_rank();
  std::vector<Vec> boundary;
  for (const Vec& r : a.boundary_rays()) {
    Vec v = r;
    v.resize(na + nb, Int(0));
    boundary.push_back(v);
  }
  for (const Vec& r : b.boundary_rays()) {
    Vec v(na, Int(0));
    v.insert(v.end(), r.begin(), r.end());
    boundary.push_back(v);
  }
  return ToricLogPair(product_fan(a.fan(), b.fan()), std::move(boundary));
}

std::vector<std::size_t> boundary_strata_counts(const ToricLogPair& p) {
  std::vector<std::size_t> counts(p.fan().ambient_rank(), 0);
  for (const Cone& c : p.boundary_subfan().all_cones())
    if (c.dim() >= 1) ++counts[c.dim() - 1];
  return counts;
}

ToricLogPair admissible_blowup(const ToricLogPair& p, const Cone& tau) {
  if (!p.fan().has_cone(tau)) throw PreconditionError("admissible_blowup: " + tau.str() + " is not a cone of the fan");
  if (std::none_of(tau.rays().begin(), tau.rays().end(), [&](const Vec& r) { return p.is_boundary_ray(r); }))
    throw PreconditionError("admissible_blowup: center " + tau.str() + " does not meet the boundary");
  std::vector<Vec> boundary = p.boundary_rays();
  boundary.push_back(tau.interior_point());
  return ToricLogPair(star_subdivision(p.fan(), tau), std::move(boundary));
}

bool is_log_modification(const IntMatrix& map, const ToricLogPair& source, const ToricLogPair& target) {
  if (!is_fan_map(map, source.fan(), target.fan()))
    throw PreconditionError("is_log_modification: not a fan map");
  if (!subdivision_predicates(map, source.fan(), target.fan()).is_subdivision) return false;
  Fan sub = target.boundary_subfan();
  for (const Vec& r : source.fan().rays())
    if (source.is_boundary_ray(r) != sub.contains(map.apply(r))) return false;
  return true;
}

}  // namespace logfan
