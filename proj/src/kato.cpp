#include "logfan/kato.hpp"

#include <algorithm>

namespace logfan {

CharParam::CharParam(long p) : p_(p) {
  if (p < 0) throw PreconditionError("CharParam: negative characteristic");
  if (p == 1) throw PreconditionError("CharParam: 1 is not a prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionError("CharParam: " + std::to_string(p) + " is not a prime");
}

bool CharParam::is_invertible(const Int& d) const { return p_ == 0 || d % p_ != 0; }

IntMatrix group_map(const MonoidHom& theta) {
  std::vector<Vec> bp = group_completion(theta.source());
  std::vector<Vec> bq = group_completion(theta.target());
  IntMatrix m(bq.size(), bp.size());
  for (std::size_t j = 0; j < bp.size(); ++j) {
    auto c = coordinates_in(bq, theta.matrix().apply(bp[j]));
    if (!c) throw Error("group_map: image outside the target group");
    for (std::size_t i = 0; i < bq.size(); ++i) m(i, j) = (*c)[i];
  }
  return m;
}

ChartSmoothness chart_smoothness(const MonoidHom& theta, CharParam ch) {
  IntMatrix m = group_map(theta);
  ChartSmoothness out;
  // The groups are torsion-free, so a finite kernel is a trivial one.
  bool injective = rank(m) == m.cols();
  AbelianQuotient q = cokernel(m);
  bool invertible = std::all_of(q.invariant_factors.begin(), q.invariant_factors.end(),
                                [&](const Int& d) { return ch.is_invertible(d); });
  out.log_smooth = injective && invertible;
  out.log_etale = out.log_smooth && q.free_rank == 0;
  return out;
}

std::size_t omega1_rank(const MonoidHom& theta) { return cokernel(group_map(theta)).free_rank; }

OmegaRank omega_rank_pair(const ToricLogPair& p, long degree) {
  if (degree < 0) throw PreconditionError("omega_rank_pair: negative degree");
  OmegaRank out;
  const unsigned long n = p.fan().ambient_rank();
  if (static_cast<unsigned long>(degree) > n)
    out.rank = 0;
  else
    mpz_bin_uiui(out.rank.get_mpz_t(), n, static_cast<unsigned long>(degree));
  const Fan boundary = p.boundary_subfan();
  for (const Cone& c : boundary.max_cones()) out.dlog_count = std::max(out.dlog_count, c.dim());
  return out;
}

KummerCover kummer_cover_chart(const AffineMonoid& p, const Int& n, CharParam ch) {
  NthRoot root = nth_root(p, n);
  KummerCover out{root.inclusion, is_kummer(root.inclusion), false};
  out.log_etale = chart_smoothness(root.inclusion, ch).log_etale;
  return out;
}

}  // namespace logfan
