#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logfan/cone.hpp"
#include "logfan/lattice.hpp"

namespace logfan {

/// Finite collection of strictly convex cones, stored by its maximal cones.
///
/// The constructor drops a cone only when it is a face of another listed cone,
/// so a collection that is not a fan (overlapping or nested cones) survives
/// construction and is reported by validate().
class Fan {
 public:
  explicit Fan(std::size_t ambient_rank = 0, std::vector<Cone> cones = {});
  /// Convenience: each entry is the ray list of one cone.
  static Fan from_rays(std::size_t ambient_rank, const std::vector<std::vector<Vec>>& cones);

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Cone>& max_cones() const { return max_; }
  /// Face closure, sorted canonically.
  std::vector<Cone> all_cones() const;
  /// Cones of the face closure of the given dimension.
  std::vector<Cone> cones_of_dim(std::size_t d) const;
  /// Union of the rays of all cones, sorted.
  std::vector<Vec> rays() const;
  bool empty() const { return max_.empty(); }

  bool has_cone(const Cone& c) const;
  /// v lies in the support.
  bool contains(const Vec& v) const;

  friend bool operator==(const Fan& a, const Fan& b) { return a.rank_ == b.rank_ && a.max_ == b.max_; }
  friend bool operator<(const Fan& a, const Fan& b);

  std::string str() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Cone> max_;
};

struct FanViolation {
  Cone first;
  Cone second;
  Cone intersection;
};

struct FanReport {
  bool valid = true;
  std::vector<FanViolation> violations;  // pairs whose intersection is not a common face
  std::string str() const;
};

/// Every pair of maximal cones meets in a common face. Face closure holds by
/// construction.
FanReport validate(const Fan& fan);

/// Wall criterion: nonempty, all maximal cones full-dimensional, every ridge
/// in exactly two maximal cones. Cross-checked against deterministic sampling;
/// a disagreement throws Error.
bool is_complete(const Fan& fan);

/// Every maximal cone of `source` maps into some cone of `target`.
bool is_fan_map(const IntMatrix& map, const Fan& source, const Fan& target);

struct SubdivisionReport {
  bool is_partial_subdivision = false;
  bool is_subdivision = false;
};
/// Requires a fan map and ambient rank ≤ 4. Support equality is decided by
/// comparing normalized lattice volumes inside each maximal target cone.
SubdivisionReport subdivision_predicates(const IntMatrix& map, const Fan& source, const Fan& target);
/// |a| = |b|, by the same volume comparison. Ambient rank ≤ 4.
bool same_support(const Fan& a, const Fan& b);

/// Σ*(τ) with center the sum of τ's rays. Requires τ ∈ Σ, dim τ ≥ 1 and every
/// maximal cone containing τ smooth.
Fan star_subdivision(const Fan& fan, const Cone& tau);
/// Replace each cone σ ∋ v by the cones over v and the facets of σ missing v.
Fan stellar_subdivision(const Fan& fan, const Vec& v);

/// Cones θ^{-1}(f(τ)) ∩ σ' over maximal τ of one leg and σ' of the other,
/// where f is the leg that is a partial subdivision. The result lives in the
/// source lattice of the other leg (the second leg if both qualify).
Fan fiber_product(const IntMatrix& map1, const Fan& fan1, const IntMatrix& map2, const Fan& fan2,
                  const Fan& base);

Fan product_fan(const Fan& a, const Fan& b);

/// Union and common cones of two fans in the same lattice.
Fan fan_union(const Fan& a, const Fan& b);
Fan fan_intersection(const Fan& a, const Fan& b);

/// Rank-2 completion: sweep the rays by angle and close every uncovered gap.
/// A gap wider than π gets the negated ray, a gap of exactly π gets the ray
/// rotated by a quarter turn, smaller gaps get the cone on both rays.
Fan complete_2d(const Fan& fan);

struct Resolution {
  Fan fan;
  std::vector<Vec> centers;         // ray inserted at each step
  std::vector<Fan> intermediates;   // fan after each step
};
/// Rank-2 resolution by repeated stellar subdivision at the first interior
/// Hilbert basis element of the first singular cone.
Resolution resolve_2d(const Fan& fan);

inline constexpr std::size_t kDefaultRefinementDepth = 4;

/// Breadth-first search over star subdivisions at 2-dimensional cones for a
/// fan that refines `goal`. Both fans must be smooth with equal support.
/// nullopt means "not found within depth".
std::optional<std::vector<Cone>> search_refinement(const Fan& fan, const Fan& goal,
                                                   std::size_t depth = kDefaultRefinementDepth);

/// All maximal cones smooth.
bool is_smooth(const Fan& fan);

}  // namespace logfan
