#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "logfan/fan.hpp"

namespace logfan {

/// Smooth fan plus a set of boundary rays. The boundary subfan consists of the
/// cones all of whose rays are boundary rays.
class ToricLogPair {
 public:
  /// Throws PreconditionError if the fan is not smooth or a boundary vector is
  /// not a ray of the fan.
  ToricLogPair(Fan fan, std::vector<Vec> boundary_rays);

  const Fan& fan() const { return fan_; }
  const std::vector<Vec>& boundary_rays() const { return boundary_; }
  bool is_boundary_ray(const Vec& r) const;
  Fan boundary_subfan() const;

  friend bool operator==(const ToricLogPair&, const ToricLogPair&) = default;
  std::string str() const;

 private:
  Fan fan_;
  std::vector<Vec> boundary_;
};

/// The pair (P¹, ∞) with rays ±e₁ and boundary ray −e₁.
ToricLogPair box_pair();
/// n-fold product of box_pair(); n = 0 gives the point.
ToricLogPair box_power(std::size_t n);

ToricLogPair product(const ToricLogPair& a, const ToricLogPair& b);

/// c_a for a = 1..n: the number of a-dimensional cones of the boundary subfan.
std::vector<std::size_t> boundary_strata_counts(const ToricLogPair& p);

/// Star subdivision at τ with the center ray added to the boundary. Requires
/// τ ∈ Σ and τ to have a boundary ray.
ToricLogPair admissible_blowup(const ToricLogPair& p, const Cone& tau);

/// φ is a subdivision and the boundary rays of `source` are exactly its rays
/// mapping into the support of the boundary subfan of `target`.
bool is_log_modification(const IntMatrix& map, const ToricLogPair& source, const ToricLogPair& target);

}  // namespace logfan
