#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logfan/lattice.hpp"

namespace logfan {

/// Rational polyhedral cone in Z^n, stored in both descriptions.
///
/// Canonical form: rays are primitive, sorted, and orthogonal to the
/// lineality space; facet normals are primitive, sorted, and orthogonal to
/// the equations; lineality and equations are HNF lattice bases. Two cones
/// are equal iff rays and lineality agree.
///
/// Duality is free: the dual cone swaps (rays, lineality) with
/// (facet normals, equations).
class Cone {
 public:
  /// The zero cone {0} in Z^n.
  explicit Cone(std::size_t ambient_rank = 0);

  /// Cone(generators). Zero vectors are ignored.
  static Cone from_generators(std::size_t ambient_rank, const std::vector<Vec>& generators);
  /// {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}.
  static Cone from_inequalities(std::size_t ambient_rank, const std::vector<Vec>& inequalities,
                                const std::vector<Vec>& equations = {});

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& facet_normals() const { return facets_; }
  const std::vector<Vec>& lineality_basis() const { return lineality_; }
  const std::vector<Vec>& equations() const { return equations_; }

  std::size_t dim() const { return rank_ - equations_.size(); }
  bool is_strictly_convex() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_simplicial() const { return is_strictly_convex() && rays_.size() == dim(); }

  bool contains(const Vec& v) const;
  bool contains(const Cone& other) const;
  /// Sum of the extreme rays; lies in the relative interior when the cone is
  /// strictly convex and nonzero.
  Vec interior_point() const;

  Cone dual() const;

  /// Generators of the cone: rays plus ± lineality basis.
  std::vector<Vec> generators() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend bool operator<(const Cone& a, const Cone& b);

  std::string str() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Vec> rays_;
  std::vector<Vec> facets_;
  std::vector<Vec> lineality_;
  std::vector<Vec> equations_;
};

/// σ ∩ τ, by concatenating both inequality systems.
Cone intersect(const Cone& a, const Cone& b);

/// All faces of the cone, including the minimal face and the cone itself,
/// sorted canonically.
std::vector<Cone> faces(const Cone& c);
/// Faces of codimension one.
std::vector<Cone> facets(const Cone& c);
bool is_face_of(const Cone& face, const Cone& c);

/// Unique minimal generating set of c ∩ Z^n. Requires c strictly convex.
std::vector<Vec> hilbert_basis(const Cone& c);

/// Monoid generators of c ∩ Z^n when c may have lineality: a Hilbert basis
/// of the pointed quotient, lifted, plus ± a lineality basis.
std::vector<Vec> lattice_point_generators(const Cone& c);

/// Rays independent and extendable to a lattice basis. Requires strict convexity.
bool is_smooth(const Cone& c);

/// Simplicial cones (as ray lists) with pairwise disjoint interiors whose
/// union is c, obtained by coning from the first ray. Requires strict convexity.
std::vector<std::vector<Vec>> triangulate(const Cone& c);

/// Lattice points of the half-open fundamental parallelepiped of linearly
/// independent rays (includes 0).
std::vector<Vec> parallelepiped_points(const std::vector<Vec>& rays, std::size_t ambient_rank);

/// Index of the sublattice generated by independent `rays` inside the
/// saturated lattice they span.
Int lattice_index(const std::vector<Vec>& rays, std::size_t ambient_rank);

/// Image of a cone under a linear map (rays and lineality pushed forward).
Cone image(const IntMatrix& map, const Cone& c);
/// {x : map x ∈ c}.
Cone preimage(const IntMatrix& map, const Cone& c);

}  // namespace logfan
