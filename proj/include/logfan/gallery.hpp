#pragma once

// Explicit fan constructions with machine-checkable verification bundles.
//
// Each case builds its fans from hand-listed cones and then recomputes them
// through the general operations (star subdivisions, fiber products, unions,
// blow-ups of pairs). A check passes when both routes agree.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logfan/fan.hpp"
#include "logfan/logpair.hpp"

namespace logfan {

struct GalleryCheck {
  std::string name;
  bool passed = false;
  std::string diagnostic;  // empty on success
};

struct GalleryCase {
  std::string name;
  std::vector<std::pair<std::string, Fan>> fans;
  std::vector<std::pair<std::string, ToricLogPair>> pairs;
  std::vector<GalleryCheck> checks;
  std::vector<std::string> summary;  // extra report lines

  bool passed() const;
  /// First failing check, or nullptr.
  const GalleryCheck* first_failure() const;
  std::string report() const;
};

/// Blow-up of the affine plane at the origin, covered by charts.
/// `mutate` drops the ray (1,0) from the fan of the common chart.
GalleryCase plane_blowup_case(bool mutate = false);

struct ProjectiveProductOptions {
  bool mutate = false;  // drops −e_n from the cone Cone(e_1,…,e_{n−1},−e_n) of the product fan
  std::optional<Cone> product_center;  // replaces Cone(−e_n, −e_1−…−e_{n−1})
};
/// Pⁿ and Pⁿ⁻¹×P¹ dominated by a common two-step blow-up. 2 ≤ n ≤ 4.
GalleryCase projective_product_case(std::size_t n, const ProjectiveProductOptions& options = {});

/// Deformation of a point to its normal bundle in A^p. 2 ≤ p ≤ 4.
/// `mutate` drops the first cone of the cover chart.
GalleryCase point_deformation_case(std::size_t p, bool mutate = false);

struct BlowupBundleOptions {
  bool mutate = false;  // uses the projection onto the first n−1 coordinates as the bundle map
  std::optional<IntMatrix> bundle_map;
};
/// The blow-up of Pⁿ at a torus-fixed point as a P¹-bundle over Pⁿ⁻¹. 2 ≤ n ≤ 4.
GalleryCase blowup_bundle_case(std::size_t n, const BlowupBundleOptions& options = {});

// Blow-ups of a product of three trivial bundles of ranks (p1, p2, p3) along
// the coordinate blocks. Blocks are numbered 1..6: the three single blocks,
// then blocks 1+2, 2+3 and 1+2+3. Block 0 is empty.

using BlockSizes = std::array<std::size_t, 3>;

/// Subset of {1,…,6}; bit t−1 stands for t.
using BlockSet = unsigned;
inline constexpr BlockSet kAllBlocks = 0x3f;
inline constexpr bool block_set_has(BlockSet s, int t) { return (s >> (t - 1)) & 1u; }

/// The condition under which the blow-up sequence is along smooth centers:
/// s ∩ {4,5,6} ≠ {4,5}.
bool is_admissible(BlockSet s);
/// "", "1", "146", …
std::string block_set_name(BlockSet s);

/// Coordinate indices (0-based) of block t.
std::vector<std::size_t> block_coordinates(const BlockSizes& sizes, int t);
/// Sum of the basis vectors of block t.
Vec block_sum(const BlockSizes& sizes, int t);

/// Choice of (p, q, r) with p ∈ {0,1,4,6}, q ∈ {0,2,4,5,6}, r ∈ {0,3,5,6}.
using BlockTriple = std::array<int, 3>;
/// All 80 triples, sorted.
std::vector<BlockTriple> block_triples();
/// The hand-listed triples with full-dimensional cones, 46 of them. Four more
/// full-dimensional triples (046, 146, 650, 653) are absent from the list;
/// each gives the same cone as a listed one.
const std::vector<BlockTriple>& concise_triples();
bool is_concise(const BlockTriple& t);
/// {4,5} ⊆ {p,q,r}.
bool has_both_middle_blocks(const BlockTriple& t);
/// Concise and {4,5} ⊄ {p,q,r}.
bool is_standard(const BlockTriple& t);

/// Minimum coordinates u, v, w in blocks 1, 2, 3 (0-based, global index).
using MinimumIndices = std::array<std::size_t, 3>;

/// {a ≥ 0 : a_u ≤ a_i (i ∈ block p), a_v ≤ a_i (i ∈ block q), a_w ≤ a_i (i ∈ block r)},
/// built from its inequality description.
Cone minimum_cone(const BlockSizes& sizes, const MinimumIndices& uvw, const BlockTriple& pqr);
/// Closed-form generators of minimum_cone for a full-dimensional triple
/// without {4,5}: the basis vectors other than e_u, e_v, e_w together with
/// f_p (or e_u when p = 0), f_q (or e_v) and f_r (or e_w).
std::vector<Vec> standard_generators(const BlockSizes& sizes, const MinimumIndices& uvw, const BlockTriple& pqr);

/// Star subdivision of the orthant at the cone on block t.
Fan block_blowup_fan(const BlockSizes& sizes, int t);
/// Fiber product over the orthant of block_blowup_fan(t) for t ∈ s, indexed by s.
std::vector<Fan> block_blowup_fans(const BlockSizes& sizes, const std::optional<int>& drop_center = {});

/// Requires each pᵢ ≥ 1 and p1+p2+p3 ≤ 4. `mutate` builds the fan for block 6
/// without its center ray.
GalleryCase triple_bundle_case(const BlockSizes& sizes, bool mutate = false);

/// Zero-block sets of the subvarieties blown up by block t.
std::vector<std::vector<int>> zero_blocks(bool mutate = false);
/// ⊆-minimal zero blocks among those of s; equal forms mean equal open parts.
std::vector<std::vector<int>> open_part_form(BlockSet s, const std::vector<std::vector<int>>& blocks);
/// Groups of admissible sets with equal open part, as listed by hand.
const std::vector<std::vector<BlockSet>>& listed_open_part_groups();

/// `mutate` replaces the zero block of block 4 by {1}.
GalleryCase triple_bundle_groups_case(bool mutate = false);

/// Names of every case run by run_gallery, in output order.
std::vector<std::string> gallery_case_names();
/// Throws PreconditionError for an unknown name.
GalleryCase run_gallery_case(std::string_view name, bool mutate = false);
/// Runs cases concurrently; results in the order of `names`.
std::vector<GalleryCase> run_gallery(const std::vector<std::string>& names, bool mutate = false);

}  // namespace logfan
