#pragma once

// Rational polyhedral cones: double description, the face lattice with its
// Hasse diagram, an incidence function on cover pairs, relative interiors and
// simple faces.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "semimon/exactlin.hpp"

namespace semimon {

/// Fixed-size set of small indices (extreme rays, support forms).
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const BitSet& other) const;
  std::vector<std::size_t> indices() const;

  BitSet& operator&=(const BitSet& other);
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend bool operator==(const BitSet& a, const BitSet& b) = default;
  /// Lexicographic order on the sorted index lists.
  friend bool operator<(const BitSet& a, const BitSet& b) { return a.indices() < b.indices(); }

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& b) const { return b.hash(); }
};

/// Extreme rays of the pointed cone {x in R^dim : a.x >= 0 for all rows a}.
/// The rows must have rank dim.
std::vector<IntVector> extreme_rays_of(const std::vector<IntVector>& constraints, std::size_t dim);

class RationalCone {
 public:
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return span_.rank(); }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  /// Primitive integer forms, one per facet, nonnegative on the cone.
  const std::vector<IntVector>& support_forms() const noexcept { return forms_; }
  /// Primitive, irredundant; ordered by first occurrence among the generators.
  const std::vector<IntVector>& extreme_rays() const noexcept { return rays_; }
  /// Saturated lattice R(cone) intersected with Z^m.
  const Lattice& span_lattice() const noexcept { return span_; }

  bool contains(std::span<const Integer> x) const;
  /// Rays lying on the facet with the given support form.
  const BitSet& facet_rays(std::size_t form) const { return facet_rays_[form]; }

 private:
  friend RationalCone dual_description(const std::vector<IntVector>&, std::size_t);

  std::size_t ambient_ = 0;
  std::vector<IntVector> generators_;
  std::vector<IntVector> forms_;
  std::vector<IntVector> rays_;
  std::vector<BitSet> facet_rays_;
  Lattice span_;
};

/// Support forms and extreme rays of cn(generators); throws NotPointed when
/// the cone contains a line.
RationalCone dual_description(const std::vector<IntVector>& generators, std::size_t ambient);
/// The full-dimensional pointed cone {x : a.x >= 0} given by inequalities.
RationalCone cone_from_inequalities(const std::vector<IntVector>& forms, std::size_t ambient);

/// Sum of the support forms: positive on the cone minus the apex.
IntVector grading_form(const RationalCone& cone);

struct Face {
  std::size_t id = 0;
  BitSet rays;
  std::vector<std::size_t> zero_set;  ///< support forms vanishing on the face
  std::size_t dim = 0;
  Lattice span;  ///< R(F) intersected with Z^m
};

enum class IncidenceConvention {
  FirstRays,  ///< face bases from the first independent rays in index order
  LastRays,   ///< ... in reverse index order
};

class FaceLattice {
 public:
  explicit FaceLattice(RationalCone cone, IncidenceConvention convention = IncidenceConvention::FirstRays);

  const RationalCone& cone() const noexcept { return cone_; }
  std::size_t size() const noexcept { return faces_.size(); }
  std::size_t dim() const noexcept { return cone_.dim(); }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(std::size_t id) const { return faces_[id]; }
  std::size_t apex() const noexcept { return 0; }
  std::size_t top() const noexcept { return faces_.size() - 1; }
  /// Face id of the facet cut out by support form i.
  std::size_t facet(std::size_t form) const { return facets_[form]; }
  const std::vector<std::size_t>& facets() const noexcept { return facets_; }

  const std::vector<std::size_t>& up(std::size_t id) const { return up_[id]; }
  const std::vector<std::size_t>& down(std::size_t id) const { return down_[id]; }
  /// Incidence value of a cover pair lower < upper.
  int epsilon(std::size_t lower, std::size_t upper) const;
  const std::vector<int>& up_epsilon(std::size_t id) const { return up_eps_[id]; }

  std::optional<std::size_t> find(const BitSet& rays) const;
  bool is_subface(std::size_t small, std::size_t big) const;
  /// Faces G with F subset of G, ascending ids.
  std::vector<std::size_t> interval_above(std::size_t id) const;
  std::vector<std::size_t> faces_of_dim(std::size_t d) const;
  IntVector ray_sum(std::size_t id) const;

  /// Checks the diamond condition for a table laid out like up_epsilon().
  bool diamond_condition_holds(const std::vector<std::vector<int>>& eps) const;
  const std::vector<std::vector<int>>& epsilon_table() const noexcept { return up_eps_; }

 private:
  void enumerate_faces();
  void build_covers();
  void build_incidence(IncidenceConvention convention);

  RationalCone cone_;
  std::vector<Face> faces_;
  std::vector<std::size_t> facets_;
  std::unordered_map<BitSet, std::size_t, BitSetHash> index_;
  std::vector<std::vector<std::size_t>> up_, down_;
  std::vector<std::vector<int>> up_eps_;
};

/// Face with exactly the given extreme rays; throws OutOfRange if there is none.
std::size_t find_face(const FaceLattice& fl, const std::vector<std::size_t>& rays);

/// The face whose relative interior contains x; throws NotInCone.
std::size_t minimal_face(const FaceLattice& fl, std::span<const Integer> x);
bool in_relative_interior(const FaceLattice& fl, std::size_t face, std::span<const Integer> x);
/// [F, C] is the face lattice of a simplex.
bool is_simple_face(const FaceLattice& fl, std::size_t face);

}  // namespace semimon
