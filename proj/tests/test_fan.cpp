#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "logfan/fan.hpp"

using namespace logfan;

namespace {

Vec v2(long x, long y) { return make_vec({x, y}); }

Fan fan2(std::initializer_list<std::vector<Vec>> cones) { return Fan::from_rays(2, cones); }

Fan p1() { return Fan::from_rays(1, {{make_vec({1})}, {make_vec({-1})}}); }
Fan a1() { return Fan::from_rays(1, {{make_vec({1})}}); }
Fan orthant() { return fan2({{v2(1, 0), v2(0, 1)}}); }
Fan p2() { return fan2({{v2(1, 0), v2(0, 1)}, {v2(0, 1), v2(-1, -1)}, {v2(-1, -1), v2(1, 0)}}); }

// Sampling oracle: |φ(source)| = |target| on integer points of a box.
bool sampled_same_support(const IntMatrix& phi, const Fan& source, const Fan& target, int samples) {
  IntMatrix inv = unimodular_inverse(phi);
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int i = 0; i < samples; ++i) {
    Vec v(target.ambient_rank());
    for (auto& x : v) x = d(rng);
    if (target.contains(v) != source.contains(inv.apply(v))) return false;
  }
  return true;
}

// Random fan in rank 2: sorted rays, consecutive pairs either coned or not.
Fan random_fan_2d(std::mt19937& rng, bool full_cones) {
  std::uniform_int_distribution<long> d(-7, 7);
  std::set<Vec> raw;
  std::size_t want = 2 + rng() % 4;
  while (raw.size() < want) {
    Vec v = v2(d(rng), d(rng));
    if (!is_zero(v)) raw.insert(primitive(v));
  }
  std::vector<Vec> rays(raw.begin(), raw.end());
  std::sort(rays.begin(), rays.end(), [](const Vec& a, const Vec& b) {
    auto half = [](const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    return a[0] * b[1] - a[1] * b[0] > 0;
  });
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Vec& a = rays[i];
    const Vec& b = rays[(i + 1) % rays.size()];
    bool strictly_convex_ccw = a[0] * b[1] - a[1] * b[0] > 0;
    if (strictly_convex_ccw && (full_cones || rng() % 2))
      cones.push_back(Cone::from_generators(2, {a, b}));
    else
      cones.push_back(Cone::from_generators(2, {a}));
  }
  return Fan(2, cones);
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(p1()).valid);
  Fan bad = fan2({{v2(1, 0), v2(1, 2)}, {v2(1, 1), v2(0, 1)}});
  FanReport r = validate(bad);
  CHECK(!r.valid);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].intersection == Cone::from_generators(2, {v2(1, 1), v2(1, 2)}));
  CHECK(validate(orthant()).valid);
  CHECK(orthant().all_cones().size() == 4);
}

TEST_CASE("support queries") {
  CHECK(!orthant().contains(v2(-1, -1)));
  CHECK(!is_complete(orthant()));
  Fan p1p1 = product_fan(p1(), p1());
  CHECK(is_complete(p1p1));
  CHECK(p1p1.cones_of_dim(1).size() == 4);
  CHECK(is_complete(p2()));
  CHECK(is_complete(p1()));
}

TEST_CASE("fan maps") {
  CHECK(is_fan_map(IntMatrix::identity(2), p2(), p2()));
  Fan blowup = star_subdivision(p2(), Cone::from_generators(2, {v2(1, 0), v2(0, 1)}));
  CHECK(is_fan_map(IntMatrix{{1, -1}}, blowup, p1()));
  CHECK(!is_fan_map(IntMatrix{{1, -1}}, p2(), p1()));
  CHECK(!is_fan_map(IntMatrix{{-1, 0}, {0, -1}}, orthant(), orthant()));
  CHECK_THROWS_AS(is_fan_map(IntMatrix::identity(3), orthant(), orthant()), DimensionError);
}

TEST_CASE("subdivision predicates") {
  Cone full = orthant().max_cones()[0];
  Fan star = star_subdivision(orthant(), full);
  SubdivisionReport s = subdivision_predicates(IntMatrix::identity(2), star, orthant());
  CHECK(s.is_partial_subdivision);
  CHECK(s.is_subdivision);
  Fan face = fan2({{v2(1, 0)}});
  SubdivisionReport f = subdivision_predicates(IntMatrix::identity(2), face, orthant());
  CHECK(f.is_partial_subdivision);
  CHECK(!f.is_subdivision);
  CHECK_THROWS_AS(subdivision_predicates(IntMatrix::identity(2), orthant(), face), PreconditionError);
  // Non-unimodular map: not partial.
  Fan ray = Fan::from_rays(1, {{make_vec({1})}});
  CHECK(!subdivision_predicates(IntMatrix{{2}}, ray, ray).is_partial_subdivision);
}

TEST_CASE("star subdivision") {
  Cone full = orthant().max_cones()[0];
  Fan star = star_subdivision(orthant(), full);
  CHECK(star == fan2({{v2(1, 0), v2(1, 1)}, {v2(1, 1), v2(0, 1)}}));
  CHECK(star_subdivision(p2(), Cone::from_generators(2, {v2(1, 0)})) == p2());
  CHECK_THROWS_AS(star_subdivision(orthant(), Cone::from_generators(2, {v2(1, 1)})), PreconditionError);
  Fan singular = fan2({{v2(1, 0), v2(1, 2)}});
  CHECK_THROWS_AS(star_subdivision(singular, singular.max_cones()[0]), PreconditionError);
  // Rank 3: the orthant at its full cone gives three cones around (1,1,1).
  Fan o3 = Fan::from_rays(3, {{make_vec({1, 0, 0}), make_vec({0, 1, 0}), make_vec({0, 0, 1})}});
  Fan s3 = star_subdivision(o3, o3.max_cones()[0]);
  CHECK(s3.max_cones().size() == 3);
  CHECK(validate(s3).valid);
  CHECK(subdivision_predicates(IntMatrix::identity(3), s3, o3).is_subdivision);
}

TEST_CASE("star subdivision invariants on random smooth fans") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Fan f = resolve_2d(random_fan_2d(rng, rng() % 2)).fan;
    for (const Cone& tau : f.all_cones()) {
      if (tau.is_zero()) continue;
      Fan s = star_subdivision(f, tau);
      CHECK(validate(s).valid);
      CHECK(subdivision_predicates(IntMatrix::identity(2), s, f).is_subdivision);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("fiber product") {
  CHECK(fiber_product(IntMatrix::identity(2), p2(), IntMatrix::identity(2), p2(), p2()) == p2());
  Cone full = orthant().max_cones()[0];
  Fan a = star_subdivision(orthant(), full);
  Fan b = stellar_subdivision(orthant(), v2(1, 2));
  Fan fp = fiber_product(IntMatrix::identity(2), a, IntMatrix::identity(2), b, orthant());
  CHECK(fp.rays() == std::vector<Vec>{v2(0, 1), v2(1, 0), v2(1, 1), v2(1, 2)});
  // Oracle: all pairwise intersections, then drop faces.
  std::vector<Cone> pairs;
  for (const Cone& x : a.all_cones())
    for (const Cone& y : b.all_cones()) pairs.push_back(intersect(x, y));
  CHECK(fp == Fan(2, pairs));
  CHECK(fiber_product(IntMatrix::identity(2), fp, IntMatrix::identity(2), fp, orthant()) == fp);
  CHECK(subdivision_predicates(IntMatrix::identity(2), fp, b).is_subdivision);

  // Base change along a non-unimodular map: pull back the star subdivision
  // of the P¹ fan's ray structure along x ↦ x1 - x2.
  Fan pulled = fiber_product(IntMatrix{{1}}, p1(), IntMatrix{{1, -1}},
                             star_subdivision(p2(), Cone::from_generators(2, {v2(1, 0), v2(0, 1)})), p1());
  CHECK(validate(pulled).valid);
  CHECK_THROWS_AS(fiber_product(IntMatrix{{2}}, a1(), IntMatrix{{2}}, a1(), a1()), PreconditionError);
}

TEST_CASE("product fan") {
  Fan p1p1 = product_fan(p1(), p1());
  CHECK(p1p1.max_cones().size() == 4);
  CHECK(product_fan(a1(), a1()) == orthant());
  Fan pa = product_fan(p1(), a1());
  CHECK(pa == fan2({{v2(1, 0), v2(0, 1)}, {v2(-1, 0), v2(0, 1)}}));
}

TEST_CASE("complete_2d") {
  CHECK(complete_2d(p2()) == p2());
  Fan c = complete_2d(orthant());
  CHECK(is_complete(c));
  CHECK(c.rays() == std::vector<Vec>{v2(-1, 0), v2(0, -1), v2(0, 1), v2(1, 0)});
  CHECK(c.max_cones().size() == 4);
  CHECK(c.has_cone(orthant().max_cones()[0]));
  Fan r = complete_2d(fan2({{v2(1, 0)}}));
  CHECK(is_complete(r));
  CHECK(r.rays() == std::vector<Vec>{v2(-1, 0), v2(0, -1), v2(0, 1), v2(1, 0)});
  CHECK(is_complete(complete_2d(Fan(2, {Cone(2)}))));
  CHECK_THROWS_AS(complete_2d(p1()), DimensionError);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Fan f = random_fan_2d(rng, false);
    Fan g = complete_2d(f);
    CHECK(validate(g).valid);
    CHECK(is_complete(g));
    for (const Cone& cone : f.max_cones()) CHECK(g.has_cone(cone));
  }
}

TEST_CASE("resolve_2d") {
  Resolution smooth = resolve_2d(p2());
  CHECK(smooth.fan == p2());
  CHECK(smooth.centers.empty());

  Resolution a = resolve_2d(fan2({{v2(1, 0), v2(1, 2)}}));
  CHECK(a.centers == std::vector<Vec>{v2(1, 1)});
  CHECK(a.fan.max_cones().size() == 2);
  CHECK(is_smooth(a.fan));

  Resolution b = resolve_2d(fan2({{v2(0, 1), v2(2, -1)}}));
  CHECK(b.centers == std::vector<Vec>{v2(1, 0)});
  CHECK(b.fan.max_cones().size() == 2);
  CHECK(is_smooth(b.fan));

  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    Fan f = random_fan_2d(rng, true);
    Resolution r = resolve_2d(f);
    CHECK(is_smooth(r.fan));
    Fan prev = f;
    for (const Fan& step : r.intermediates) {
      CHECK(validate(step).valid);
      CHECK(subdivision_predicates(IntMatrix::identity(2), step, prev).is_subdivision);
      prev = step;
    }
    CHECK(subdivision_predicates(IntMatrix::identity(2), r.fan, f).is_subdivision);
  }
}

TEST_CASE("search refinement") {
  auto same = search_refinement(p2(), p2(), 2);
  REQUIRE(same.has_value());
  CHECK(same->empty());
  Cone full = orthant().max_cones()[0];
  Fan goal = star_subdivision(orthant(), full);
  auto one = search_refinement(orthant(), goal, 2);
  REQUIRE(one.has_value());
  CHECK(one->size() == 1);
  Fan twice = star_subdivision(goal, Cone::from_generators(2, {v2(1, 0), v2(1, 1)}));
  auto none = search_refinement(orthant(), twice, 1);
  CHECK(!none.has_value());
  CHECK_THROWS_AS(search_refinement(orthant(), p2(), 2), PreconditionError);
}

TEST_CASE("subdivision predicate agrees with sampling") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Fan f = random_fan_2d(rng, rng() % 2);
    Fan r = resolve_2d(f).fan;
    // Drop a random maximal cone to make some instances fail.
    std::vector<Cone> cones = r.max_cones();
    if (trial % 2 && cones.size() > 1) cones.erase(cones.begin() + static_cast<long>(rng() % cones.size()));
    Fan source(2, cones);
    IntMatrix id = IntMatrix::identity(2);
    if (!is_fan_map(id, source, f)) continue;
    CHECK(subdivision_predicates(id, source, f).is_subdivision == sampled_same_support(id, source, f, 1000));
  }
}

TEST_CASE("fan union and intersection") {
  Fan a = fan2({{v2(1, 0), v2(0, 1)}});
  Fan b = fan2({{v2(0, 1), v2(-1, 0)}});
  Fan u = fan_union(a, b);
  CHECK(u.max_cones().size() == 2);
  CHECK(fan_intersection(a, b) == fan2({{v2(0, 1)}}));
}
