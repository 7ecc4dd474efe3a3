#pragma once

// Shipped example models, simplicial complexes with their homology, and the
// construction of a seminormal model whose local cohomology at one degree is
// the reduced homology of a given simplicial complex.

#include <string>
#include <string_view>
#include <vector>

#include "semimon/cohomology.hpp"
#include "semimon/monoid.hpp"

namespace semimon {

/// "pyramid-7.1" or "pyramid-7.3"; throws OutOfRange otherwise.
DecoratedCone builtin(std::string_view name);
std::vector<std::string> builtin_names();

class SimplicialComplex {
 public:
  /// Vertices are relabelled 0..n-1 in increasing order of their labels;
  /// facets contained in other facets are dropped.
  static SimplicialComplex from_facets(const std::vector<std::vector<long>>& facets);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<long>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<std::size_t>>& facets() const noexcept { return facets_; }
  bool contains(const std::vector<std::size_t>& face) const;
  /// Faces of dimension j (j + 1 vertices), sorted lexicographically; j = -1
  /// gives the empty face.
  std::vector<std::vector<std::size_t>> faces_of_dim(long j) const;
  long dim() const;
  /// Minimal vertex sets that are not faces, in lexicographic order.
  std::vector<std::vector<std::size_t>> minimal_nonfaces() const;

 private:
  std::vector<long> labels_;
  std::vector<std::vector<std::size_t>> facets_;
};

struct SimplicialHomology {
  std::vector<std::size_t> reduced;  ///< reduced[j + 1] = dim H~_j, j = -1..dim
  std::vector<unsigned long> torsion_primes;

  std::size_t at(long j) const;
};

SimplicialHomology simplicial_homology(const SimplicialComplex& delta, Field field);

struct ConstructionResult {
  DecoratedCone model;
  IntVector distinguished_degree;  ///< the apex v, of degree 1
  std::size_t rank = 0;
  std::vector<IntVector> polytope_vertices;  ///< homogenized (y, s), s > 0
  std::vector<std::string> log;
};

/// Throws VerificationFailed when no displacement scale passes the checks.
ConstructionResult delta_construct(const SimplicialComplex& delta);

/// dim H^i at -v equals dim H~_{d-i-1}(delta) over the field, for all i.
bool verify_homology_correspondence(const ConstructionResult& result, const SimplicialComplex& delta, Field field);

}  // namespace semimon
