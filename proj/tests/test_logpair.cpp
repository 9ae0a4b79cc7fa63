#include <doctest.h>

#include "logfan/logpair.hpp"

using namespace logfan;

namespace {

Vec v2(long x, long y) { return make_vec({x, y}); }
Fan orthant() { return Fan::from_rays(2, {{v2(1, 0), v2(0, 1)}}); }
Fan p2() { return Fan::from_rays(2, {{v2(1, 0), v2(0, 1)}, {v2(0, 1), v2(-1, -1)}, {v2(-1, -1), v2(1, 0)}}); }

// c_a(p × q) = Σ_{i+j=a} c_i(p) c_j(q), c_0 = 1.
bool convolution_holds(const ToricLogPair& a, const ToricLogPair& b) {
  auto with_zero = [](std::vector<std::size_t> c) {
    c.insert(c.begin(), 1);
    return c;
  };
  std::vector<std::size_t> ca = with_zero(boundary_strata_counts(a)), cb = with_zero(boundary_strata_counts(b));
  std::vector<std::size_t> cp = with_zero(boundary_strata_counts(product(a, b)));
  for (std::size_t k = 0; k < cp.size(); ++k) {
    std::size_t s = 0;
    for (std::size_t i = 0; i <= k; ++i)
      if (i < ca.size() && k - i < cb.size()) s += ca[i] * cb[k - i];
    if (s != cp[k]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("make pair") {
  ToricLogPair box = box_pair();
  CHECK(box.boundary_rays() == std::vector<Vec>{make_vec({-1})});
  CHECK(box.boundary_subfan() == Fan::from_rays(1, {{make_vec({-1})}}));
  ToricLogPair trivial(p2(), {});
  CHECK(trivial.boundary_subfan() == Fan(2, {Cone(2)}));
  CHECK_THROWS_AS(ToricLogPair(orthant(), {v2(1, 1)}), PreconditionError);
  CHECK_THROWS_AS(ToricLogPair(Fan::from_rays(2, {{v2(1, 0), v2(1, 2)}}), {}), PreconditionError);
}

TEST_CASE("products") {
  ToricLogPair box2 = box_power(2);
  CHECK(box2.boundary_rays() == std::vector<Vec>{v2(-1, 0), v2(0, -1)});
  CHECK(box2.boundary_subfan().has_cone(Cone::from_generators(2, {v2(-1, 0), v2(0, -1)})));
  ToricLogPair point(Fan(0, {Cone(0)}), {});
  CHECK(product(box_pair(), point) == box_pair());
  ToricLogPair a1(Fan::from_rays(1, {{make_vec({1})}}), {});
  CHECK(product(box_pair(), a1).boundary_rays() == std::vector<Vec>{v2(-1, 0)});
}

TEST_CASE("boundary strata") {
  CHECK(boundary_strata_counts(box_power(2)) == std::vector<std::size_t>{2, 1});
  CHECK(boundary_strata_counts(ToricLogPair(p2(), {v2(-1, -1)})) == std::vector<std::size_t>{1, 0});
  CHECK(boundary_strata_counts(ToricLogPair(p2(), {})) == std::vector<std::size_t>{0, 0});
  ToricLogPair blown = admissible_blowup(box_power(2), Cone::from_generators(2, {v2(-1, 0), v2(0, -1)}));
  CHECK(boundary_strata_counts(blown) == std::vector<std::size_t>{3, 2});
  CHECK(convolution_holds(box_pair(), box_pair()));
  CHECK(convolution_holds(box_power(2), box_pair()));
  CHECK(convolution_holds(blown, box_pair()));
  CHECK(convolution_holds(ToricLogPair(p2(), {v2(-1, -1), v2(1, 0)}), box_pair()));
}

TEST_CASE("admissible blowup") {
  Cone full = Cone::from_generators(2, {v2(1, 0), v2(0, 1)});
  // Both coordinate axes in the boundary: the new fan is entirely boundary.
  ToricLogPair all(orthant(), {v2(1, 0), v2(0, 1)});
  ToricLogPair b = admissible_blowup(all, full);
  CHECK(b.fan().max_cones().size() == 2);
  CHECK(b.boundary_rays() == std::vector<Vec>{v2(0, 1), v2(1, 0), v2(1, 1)});
  CHECK(b.boundary_subfan() == b.fan());
  CHECK(is_log_modification(IntMatrix::identity(2), b, all));

  // One axis in the boundary: the subfan is the cones inside Cone(e1, e1+e2).
  ToricLogPair one(orthant(), {v2(1, 0)});
  ToricLogPair c = admissible_blowup(one, full);
  CHECK(c.boundary_rays() == std::vector<Vec>{v2(1, 0), v2(1, 1)});
  CHECK(c.boundary_subfan() == Fan::from_rays(2, {{v2(1, 0), v2(1, 1)}}));
  CHECK(!is_log_modification(IntMatrix::identity(2), c, one));

  ToricLogPair same = admissible_blowup(one, Cone::from_generators(2, {v2(1, 0)}));
  CHECK(same == one);
  CHECK_THROWS_AS(admissible_blowup(one, Cone::from_generators(2, {v2(0, 1)})), PreconditionError);
  CHECK_THROWS_AS(admissible_blowup(one, Cone::from_generators(2, {v2(1, 1)})), PreconditionError);
}

TEST_CASE("log modifications") {
  ToricLogPair box2 = box_power(2);
  CHECK(is_log_modification(IntMatrix::identity(2), box2, box2));
  ToricLogPair blown = admissible_blowup(box2, Cone::from_generators(2, {v2(-1, 0), v2(0, -1)}));
  CHECK(is_log_modification(IntMatrix::identity(2), blown, box2));
  // composition
  ToricLogPair twice = admissible_blowup(blown, Cone::from_generators(2, {v2(-1, 0), v2(-1, -1)}));
  CHECK(is_log_modification(IntMatrix::identity(2), twice, blown));
  CHECK(is_log_modification(IntMatrix::identity(2), twice, box2));
  ToricLogPair face(Fan::from_rays(2, {{v2(-1, 0)}}), {v2(-1, 0)});
  CHECK(!is_log_modification(IntMatrix::identity(2), face, box2));
  CHECK_THROWS_AS(is_log_modification(IntMatrix::identity(2), box2, ToricLogPair(orthant(), {})), PreconditionError);
}
