#include <doctest.h>

#include <numeric>

#include "logfan/kato.hpp"

using namespace logfan;

namespace {

AffineMonoid nat() { return AffineMonoid(1, {make_vec({1})}); }
MonoidHom times(long n) { return MonoidHom(nat(), nat(), IntMatrix{{n}}); }

}  // namespace

TEST_CASE("chart smoothness examples") {
  ChartSmoothness a = chart_smoothness(times(4), CharParam(0));
  CHECK(a.log_smooth);
  CHECK(a.log_etale);
  ChartSmoothness b = chart_smoothness(times(3), CharParam(3));
  CHECK(!b.log_smooth);
  CHECK(!b.log_etale);
  MonoidHom from_zero(AffineMonoid(0), nat(), IntMatrix(1, 0));
  for (long p : {0L, 2L, 5L}) {
    ChartSmoothness c = chart_smoothness(from_zero, CharParam(p));
    CHECK(c.log_smooth);
    CHECK(!c.log_etale);
  }
  // sum map N² → N has a kernel
  MonoidHom sum(AffineMonoid(2, {make_vec({1, 0}), make_vec({0, 1})}), nat(), IntMatrix{{1, 1}});
  CHECK(!chart_smoothness(sum, CharParam(0)).log_smooth);
  CHECK_THROWS_AS(CharParam(4), PreconditionError);
  CHECK_THROWS_AS(CharParam(-3), PreconditionError);
}

TEST_CASE("multiplication family") {
  for (long p : {0L, 2L, 3L, 5L, 7L})
    for (long n = 1; n <= 30; ++n) {
      ChartSmoothness s = chart_smoothness(times(n), CharParam(p));
      bool coprime = p == 0 || std::gcd(n, p) == 1;
      CHECK(s.log_etale == coprime);
      if (s.log_etale) CHECK(s.log_smooth);
    }
}

TEST_CASE("omega ranks") {
  AffineMonoid n2(2, {make_vec({1, 0}), make_vec({0, 1})});
  CHECK(omega1_rank(MonoidHom(n2, n2, IntMatrix::identity(2))) == 0);
  CHECK(omega1_rank(times(5)) == 0);
  CHECK(omega1_rank(MonoidHom(AffineMonoid(0), nat(), IntMatrix(1, 0))) == 1);
  // Kummer ⇒ no differentials
  CHECK(omega1_rank(MonoidHom(n2, n2, IntMatrix{{2, 1}, {0, 3}})) == 0);

  ToricLogPair a2(Fan::from_rays(2, {{make_vec({1, 0}), make_vec({0, 1})}}), {make_vec({1, 0})});
  OmegaRank r = omega_rank_pair(a2, 1);
  CHECK(r.rank == 2);
  CHECK(r.dlog_count == 1);
  CHECK(omega_rank_pair(a2, 0).rank == 1);
  CHECK(omega_rank_pair(a2, 3).rank == 0);
  CHECK_THROWS_AS(omega_rank_pair(a2, -1), PreconditionError);
}

TEST_CASE("kummer covers") {
  KummerCover a = kummer_cover_chart(nat(), 2, CharParam(0));
  CHECK(a.is_kummer);
  CHECK(a.log_etale);
  KummerCover b = kummer_cover_chart(nat(), 5, CharParam(5));
  CHECK(b.is_kummer);
  CHECK(!b.log_etale);
  KummerCover c = kummer_cover_chart(nat(), 1, CharParam(3));
  CHECK(c.hom.matrix() == IntMatrix{{1}});
  CHECK(c.log_etale);
  AffineMonoid p(2, {make_vec({0, 1}), make_vec({1, 0}), make_vec({2, -1})});
  for (long n = 1; n <= 4; ++n) {
    KummerCover k = kummer_cover_chart(p, n, CharParam(2));
    CHECK(k.is_kummer);
    CHECK(is_exact(k.hom));
    CHECK(k.log_etale == (n % 2 == 1));
  }
  CHECK_THROWS_AS(kummer_cover_chart(AffineMonoid(1, {make_vec({2}), make_vec({3})}), 2, CharParam(0)),
                  PreconditionError);
}
