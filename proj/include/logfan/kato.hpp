#pragma once

// Chart-level smoothness predicates and ranks of toric log differentials.

#include <cstddef>

#include "logfan/logpair.hpp"
#include "logfan/monoid.hpp"

namespace logfan {

/// Characteristic of the base: 0 or a prime.
class CharParam {
 public:
  explicit CharParam(long p = 0);
  long value() const { return p_; }
  /// Every prime factor of d differs from p (always true for p = 0).
  bool is_invertible(const Int& d) const;

 private:
  long p_;
};

struct ChartSmoothness {
  bool log_smooth = false;
  bool log_etale = false;
};

/// θ^gp: P^gp → Q^gp in lattice bases of both groups.
IntMatrix group_map(const MonoidHom& theta);

/// log smooth: θ^gp injective and every invariant factor of coker θ^gp
/// invertible; log étale: additionally coker θ^gp finite.
ChartSmoothness chart_smoothness(const MonoidHom& theta, CharParam ch);

/// Free rank of coker θ^gp.
std::size_t omega1_rank(const MonoidHom& theta);

struct OmegaRank {
  Int rank;                      // binomial(n, degree)
  std::size_t dlog_count = 0;    // largest dimension of a boundary cone
};
OmegaRank omega_rank_pair(const ToricLogPair& p, long degree);

struct KummerCover {
  MonoidHom hom;
  bool is_kummer = false;
  bool log_etale = false;
};
/// The inclusion P → P^{1/n}. Requires P saturated and n ≥ 1.
KummerCover kummer_cover_chart(const AffineMonoid& p, const Int& n, CharParam ch);

}  // namespace logfan
