#pragma once

// Generator-presented affine monoids and decorated cones (a cone with one
// lattice per face), the extensional form of a seminormal monoid.

#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "semimon/exactlin.hpp"
#include "semimon/polyhedral.hpp"

namespace semimon {

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const;
};
using PointSet = std::unordered_set<IntVector, IntVectorHash>;

/// Points of cone ∩ L with 0 <= deg(x) <= bound, sorted by degree then
/// lexicographically. L must lie in the span of the cone.
std::vector<IntVector> lattice_points_up_to(const RationalCone& cone, const Lattice& L, const IntVector& deg,
                                            const Integer& bound);

class AffineMonoid {
 public:
  /// Validates and caches cone, face lattice, group and face groups; throws
  /// ZeroGenerator or NotPositive.
  AffineMonoid(std::vector<IntVector> generators, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return faces_->dim(); }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  const RationalCone& cone() const noexcept { return faces_->cone(); }
  const FaceLattice& faces() const noexcept { return *faces_; }
  std::shared_ptr<const FaceLattice> faces_ptr() const noexcept { return faces_; }
  /// gp(M)
  const Lattice& group() const { return face_groups_[faces_->top()]; }
  /// gp(M ∩ F)
  const Lattice& face_group(std::size_t face) const { return face_groups_[face]; }
  /// Sum of the support forms.
  const IntVector& grading() const noexcept { return grading_; }
  Integer degree(std::span<const Integer> x) const { return dot(grading_, x); }

 private:
  std::size_t ambient_;
  std::vector<IntVector> generators_;
  std::shared_ptr<const FaceLattice> faces_;
  std::vector<Lattice> face_groups_;
  IntVector grading_;
};

AffineMonoid monoid_new(const std::vector<IntVector>& generators, std::size_t ambient);

bool member(const AffineMonoid& m, std::span<const Integer> x);
/// All elements of M of degree at most bound, for bulk membership queries.
PointSet elements_up_to(const AffineMonoid& m, const Integer& bound);

std::vector<IntVector> face_submonoid_generators(const AffineMonoid& m, std::size_t face);

/// Minimal generating set of cone ∩ L, sorted by degree (sum of support forms).
std::vector<IntVector> hilbert_basis(const RationalCone& cone, const Lattice& L);

struct NormalityVerdict {
  bool normal = true;
  std::optional<IntVector> witness;  ///< Hilbert basis element outside M
};
NormalityVerdict is_normal(const AffineMonoid& m);

/// Membership in the seminormalization: x in cn(M) and x in gp(M ∩ F) for the
/// face F carrying x in its relative interior.
bool sn_member(const AffineMonoid& m, std::span<const Integer> x);

struct SeminormalityVerdict {
  bool seminormal_up_to = true;
  Integer bound;
  std::optional<IntVector> witness;  ///< in the seminormalization but not in M
};
SeminormalityVerdict is_seminormal_up_to(const AffineMonoid& m, const Integer& bound);
/// (rank + 1) * max generator degree.
Integer default_degree_bound(const AffineMonoid& m);

class DecoratedCone {
 public:
  /// lambda is indexed by face id. Throws DegenerateFace when a lattice is not
  /// of full rank in its face span and InvariantViolated when the assignment
  /// is not monotone; degree_form must be positive on every extreme ray.
  DecoratedCone(std::shared_ptr<const FaceLattice> faces, std::vector<Lattice> lambda, IntVector degree_form);

  const FaceLattice& faces() const noexcept { return *faces_; }
  std::shared_ptr<const FaceLattice> faces_ptr() const noexcept { return faces_; }
  const RationalCone& cone() const noexcept { return faces_->cone(); }
  std::size_t rank() const noexcept { return faces_->dim(); }
  std::size_t ambient_dim() const noexcept { return faces_->cone().ambient_dim(); }
  const Lattice& lambda(std::size_t face) const { return lambda_[face]; }
  const std::vector<Lattice>& lambdas() const noexcept { return lambda_; }
  const Lattice& group() const { return lambda_[faces_->top()]; }
  const IntVector& degree_form() const noexcept { return degree_; }
  Integer degree(std::span<const Integer> x) const { return dot(degree_, x); }

 private:
  std::shared_ptr<const FaceLattice> faces_;
  std::vector<Lattice> lambda_;
  IntVector degree_;
};

/// Lambda of every face from the lattices of the facets (indexed by support
/// form): span(G) ∩ group ∩ (intersection of facet lattices over facets ⊇ G).
DecoratedCone model_from_facet_lattices(std::shared_ptr<const FaceLattice> faces,
                                        const std::vector<Lattice>& facet_lattices, const Lattice& group,
                                        IntVector degree_form);

/// The model of the seminormalization: Lambda_F = gp(M ∩ F).
DecoratedCone to_model(const AffineMonoid& m);
bool model_member(const DecoratedCone& w, std::span<const Integer> x);
/// The decorated cone of the face submonoid M ∩ F.
DecoratedCone restrict_to_face(const DecoratedCone& w, std::size_t face);
/// Irreducible model elements of degree at most bound.
std::vector<IntVector> model_irreducibles(const DecoratedCone& w, const Integer& bound);
/// Least positive multiple of a primitive ray lying in L.
IntVector primitive_multiple_in(const Lattice& L, const IntVector& ray);

}  // namespace semimon
