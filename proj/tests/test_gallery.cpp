#include <doctest.h>

#include <random>

#include "logfan/gallery.hpp"

using namespace logfan;

namespace {

bool check_passed(const GalleryCase& c, const std::string& name) {
  for (const GalleryCheck& k : c.checks)
    if (k.name == name) return k.passed;
  FAIL("no check named " << name);
  return false;
}

// Full-dimensional iff the relation "a_x ≤ a_y" forced by the triple has no
// cycle through distinct coordinates.
bool acyclic_oracle(const BlockSizes& sizes, const MinimumIndices& uvw, const BlockTriple& pqr) {
  const std::size_t n = sizes[0] + sizes[1] + sizes[2];
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i : block_coordinates(sizes, pqr[k])) le[uvw[k]][i] = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][m] && le[m][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) return false;
  return true;
}

bool sampled_same_support(const Fan& a, const Fan& b) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int k = 0; k < 1000; ++k) {
    Vec v = make_vec({d(rng), d(rng)});
    if (a.contains(v) != b.contains(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("plane blow-up") {
  GalleryCase c = plane_blowup_case();
  CHECK_MESSAGE(c.passed(), c.report());
  CHECK(c.fans.size() == 11);
  CHECK(c.pairs.size() == 11);

  GalleryCase m = plane_blowup_case(true);
  REQUIRE(!m.passed());
  CHECK(!check_passed(m, "Σ4 ∩ Σ6 = Σ7"));
  CHECK(m.first_failure()->diagnostic.find("(1,0)") != std::string::npos);

  const Fan& s1 = c.fans[0].second;
  const Fan& s2 = c.fans[1].second;
  CHECK(subdivision_predicates(IntMatrix::identity(2), s2, s1).is_subdivision);
  CHECK(sampled_same_support(s1, s2));
}

TEST_CASE("projective product") {
  for (std::size_t n : {2u, 3u}) {
    GalleryCase c = projective_product_case(n);
    CHECK_MESSAGE(c.passed(), c.report());
  }
  GalleryCase two = projective_product_case(2);
  CHECK(two.fans[1].second ==
        Fan::from_rays(2, {{make_vec({1, 0}), make_vec({0, 1})},
                           {make_vec({1, 0}), make_vec({0, -1})},
                           {make_vec({-1, 0}), make_vec({0, 1})},
                           {make_vec({-1, 0}), make_vec({0, -1})}}));

  ProjectiveProductOptions bad;
  bad.product_center = Cone::from_generators(2, {make_vec({1, 1}), make_vec({-1, 2})});
  CHECK_THROWS_AS(projective_product_case(2, bad), PreconditionError);
  CHECK(!projective_product_case(2, {true, std::nullopt}).passed());
  CHECK_THROWS_AS(projective_product_case(1), PreconditionError);
  CHECK_THROWS_AS(projective_product_case(5), PreconditionError);
}

TEST_CASE("point deformation") {
  for (std::size_t p : {2u, 3u, 4u}) {
    GalleryCase c = point_deformation_case(p);
    CHECK_MESSAGE(c.passed(), c.report());
  }
  GalleryCase m = point_deformation_case(3, true);
  CHECK(!check_passed(m, "Σ1 ∪ Σ7 = Σ3"));
  CHECK(!check_passed(m, "Σ4 ∪ Σ7 = Σ6"));
  CHECK(check_passed(m, "Σ2*(σ3) = Σ3"));
  CHECK_THROWS_AS(point_deformation_case(1), PreconditionError);
}

TEST_CASE("blow-up bundle") {
  for (std::size_t n : {2u, 3u}) {
    GalleryCase c = blowup_bundle_case(n);
    CHECK_MESSAGE(c.passed(), c.report());
  }
  GalleryCase m = blowup_bundle_case(2, {true, std::nullopt});
  CHECK(!check_passed(m, "φ is a fan map"));
  BlowupBundleOptions zero;
  zero.bundle_map = IntMatrix(1, 2);
  CHECK(check_passed(blowup_bundle_case(2, zero), "φ is a fan map"));
  CHECK(!blowup_bundle_case(2, zero).passed());
  CHECK_THROWS_AS(blowup_bundle_case(5), PreconditionError);
}

TEST_CASE("listed triples") {
  CHECK(concise_triples().size() == 46);
  CHECK(block_triples().size() == 80);
  CHECK(is_concise({1, 2, 3}));
  CHECK(is_standard({1, 2, 3}));
  CHECK(is_concise({4, 5, 0}));
  CHECK(!is_standard({4, 5, 0}));
  CHECK(!is_concise({4, 4, 0}));
  const BlockSizes unit_sizes{1, 1, 1};
  CHECK(minimum_cone(unit_sizes, {0, 1, 2}, {4, 5, 0}).dim() == 3);
  CHECK(minimum_cone(unit_sizes, {0, 1, 2}, {4, 4, 0}).dim() < 3);
  CHECK(block_coordinates({2, 1, 1}, 5) == std::vector<std::size_t>{2, 3});
  CHECK(block_sum({2, 1, 1}, 4) == make_vec({1, 1, 1, 0}));
  CHECK(is_admissible(0x38));
  CHECK(!is_admissible(0x18));
  CHECK(block_set_name(0x29) == "146");
}

TEST_CASE("minimum cones against the cycle criterion") {
  for (const BlockSizes& sizes : {BlockSizes{1, 1, 1}, BlockSizes{2, 1, 1}, BlockSizes{1, 2, 1}}) {
    const std::size_t n = sizes[0] + sizes[1] + sizes[2];
    for (std::size_t u : block_coordinates(sizes, 1))
      for (std::size_t v : block_coordinates(sizes, 2))
        for (std::size_t w : block_coordinates(sizes, 3))
          for (const BlockTriple& t : block_triples()) {
            const bool full = minimum_cone(sizes, {u, v, w}, t).dim() == n;
            CHECK(full == acyclic_oracle(sizes, {u, v, w}, t));
            if (is_concise(t)) CHECK(full);
          }
  }
}

TEST_CASE("triple bundle") {
  for (const BlockSizes& sizes : {BlockSizes{1, 1, 1}, BlockSizes{2, 1, 1}}) {
    GalleryCase c = triple_bundle_case(sizes);
    CHECK_MESSAGE(c.passed(), c.report());
  }
  GalleryCase m = triple_bundle_case({1, 1, 1}, true);
  CHECK(!m.passed());
  CHECK_THROWS_AS(triple_bundle_case({2, 2, 1}), PreconditionError);
  CHECK_THROWS_AS(triple_bundle_case({0, 1, 1}), PreconditionError);

  // Σ_1 with p1 = 1 blows up a ray: nothing changes.
  const std::vector<Fan> fans = block_blowup_fans({1, 1, 1});
  CHECK(fans[0x01] == fans[0]);
  CHECK(fans[0x20].max_cones().size() == 3);
  CHECK(fans[0x20].rays().size() == 4);
}

TEST_CASE("open part groups") {
  GalleryCase c = triple_bundle_groups_case();
  CHECK_MESSAGE(c.passed(), c.report());
  REQUIRE(c.summary.size() == 1);
  CHECK(c.summary[0] == "14/14 groups");
  const auto blocks = zero_blocks();
  CHECK(open_part_form(0x01, blocks) == open_part_form(0x09, blocks));
  CHECK(open_part_form(0x08, blocks) != open_part_form(0x10, blocks));
  std::size_t members = 0;
  for (const auto& g : listed_open_part_groups()) members += g.size();
  CHECK(members == 56);

  GalleryCase m = triple_bundle_groups_case(true);
  CHECK(!m.passed());
  CHECK(m.summary[0] != "14/14 groups");
}

TEST_CASE("runner") {
  const std::vector<std::string> names = {"plane-blowup", "triple-bundle-groups", "point-deformation-2"};
  std::vector<GalleryCase> cases = run_gallery(names);
  REQUIRE(cases.size() == 3);
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(cases[i].name == names[i]);
    CHECK(cases[i].passed());
  }
  CHECK_THROWS_AS(run_gallery_case("no-such-case"), PreconditionError);
  CHECK_THROWS_AS(run_gallery_case("projective-product-x"), PreconditionError);
  CHECK(run_gallery_case("triple-bundle-111").name == "triple-bundle-111");
}
