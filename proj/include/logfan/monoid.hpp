#pragma once

// Fine monoids embedded in lattices, and homomorphisms between them.

#include <cstddef>
#include <vector>

#include "logfan/cone.hpp"
#include "logfan/lattice.hpp"

namespace logfan {

/// Desk-scale limits for membership search.
inline constexpr std::size_t kMaxMonoidRank = 6;
inline constexpr std::size_t kMaxMonoidGenerators = 16;

/// Submonoid of Z^n generated by finitely many vectors. Generators are
/// deduplicated, zero-free and sorted, so equal generator sets compare equal.
class AffineMonoid {
 public:
  explicit AffineMonoid(std::size_t ambient_rank = 0, std::vector<Vec> generators = {});

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Vec>& generators() const { return gens_; }
  /// Cone spanned by the generators.
  Cone cone() const { return Cone::from_generators(rank_, gens_); }

  friend bool operator==(const AffineMonoid&, const AffineMonoid&) = default;
  std::string str() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Vec> gens_;
};

/// x is a nonnegative integer combination of the generators.
bool membership(const AffineMonoid& p, const Vec& x);

/// HNF basis of the subgroup generated by P.
std::vector<Vec> group_completion(const AffineMonoid& p);

/// cone(P) ∩ P^gp, generated by its Hilbert basis (plus units).
AffineMonoid saturation(const AffineMonoid& p);
bool is_saturated(const AffineMonoid& p);

struct MonoidStructure {
  bool is_saturated = false;
  bool is_sharp = false;
  std::vector<Vec> units;  // lattice basis of P*
  /// Image of P in Z^n / sat(P*), via `sharpening_map`.
  AffineMonoid sharpening;
  QuotientMap sharpening_map;
};
MonoidStructure structure_queries(const AffineMonoid& p);

struct MonoidFace {
  AffineMonoid face;
  std::vector<std::size_t> generator_indices;  // into p.generators()
};
/// All faces of P, from the faces of cone(P); includes the unit face and P.
std::vector<MonoidFace> faces(const AffineMonoid& p);
bool is_face(const AffineMonoid& p, const AffineMonoid& f);

/// P_F = P + (−F). Requires F to be a face.
AffineMonoid localize(const AffineMonoid& p, const AffineMonoid& f);
/// Image of P in Z^n / sat(span F). Requires F to be a face.
AffineMonoid quotient(const AffineMonoid& p, const AffineMonoid& f);

/// θ: P → Q given by an integer matrix between the ambient lattices.
class MonoidHom {
 public:
  /// Throws PreconditionError if some generator of P does not land in Q.
  MonoidHom(AffineMonoid source, AffineMonoid target, IntMatrix matrix);

  const AffineMonoid& source() const { return source_; }
  const AffineMonoid& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  AffineMonoid source_;
  AffineMonoid target_;
  IntMatrix matrix_;
};

enum class SumMode { integral, saturated };

/// Q ⊕_P P' (integral pushout) or its saturation. Both legs share the source.
/// Throws PreconditionError when the pushout group has torsion, since it then
/// has no lattice embedding.
AffineMonoid amalgamated_sum(const MonoidHom& to_q, const MonoidHom& to_p2, SumMode mode);

struct NthRoot {
  AffineMonoid root;      // P^{1/n} in the refined lattice (1/n)Z^r ≅ Z^r
  MonoidHom inclusion;    // P → P^{1/n}, matrix n·I
};
/// Requires P saturated and n ≥ 1.
NthRoot nth_root(const AffineMonoid& p, const Int& n);

/// θ^gp injective on P^gp and every generator of Q lies in cone(θ(P)).
bool is_kummer(const MonoidHom& theta);
/// P = (θ^gp)^{-1}(Q) inside P^gp.
bool is_exact(const MonoidHom& theta);

}  // namespace logfan
