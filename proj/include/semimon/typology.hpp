#pragma once

// Degree-free cohomology analysis of a decorated cone: every degree a in the
// cone determines a base face (the face carrying a in its relative interior)
// and a filter; there are finitely many such pairs, and each is decided by a
// covering question in a finite abelian group.

#include <map>
#include <optional>
#include <vector>

#include "semimon/cohomology.hpp"

namespace semimon {

struct TypologyOptions {
  std::size_t max_filters = 5000;        ///< up-closed sets per base face
  std::size_t max_quotient = 1u << 20;   ///< elements of a finite quotient group
  std::vector<unsigned long> primes{2, 3};
};

/// Elements of a finite quotient A/B of lattices of equal rank, in
/// mixed-radix order, with a class map and a lift back to A.
class FiniteQuotient {
 public:
  FiniteQuotient(const Lattice& a, const Lattice& b, std::size_t cap);

  std::size_t order() const noexcept { return order_; }
  std::size_t class_of(std::span<const Integer> x) const;
  IntVector lift(std::size_t index) const;
  /// Indices of the subgroup generated by the images of the given vectors.
  std::vector<bool> subgroup(const std::vector<IntVector>& gens) const;

 private:
  Lattice a_;
  IntMatrix to_smith_;    // A-coordinates -> Smith coordinates
  IntMatrix from_smith_;  // Smith coordinates -> ambient vector
  std::vector<unsigned long> moduli_;
  std::size_t order_ = 1;
};

struct Realizability {
  bool realizable = false;
  std::optional<IntVector> witness;
};

/// Is there a in relint G ∩ Lambda_C whose filter is exactly S? Throws
/// BadFilter unless S is an up-closed subset of [G, C] containing C.
Realizability realizable(const DecoratedCone& w, std::size_t base, const Filter& s,
                         const TypologyOptions& options = {});

struct CohomologyType {
  std::size_t base_face = 0;
  Filter filter;
  bool realizable = false;
  std::optional<IntVector> witness;
  CohomologyProfile profile;
};

/// Profiles of complexes keyed by filter.
class ProfileCache {
 public:
  ProfileCache(const FaceLattice& fl, std::vector<unsigned long> primes) : fl_(fl), primes_(std::move(primes)) {}
  const CohomologyProfile& get(const Filter& filter);

 private:
  const FaceLattice& fl_;
  std::vector<unsigned long> primes_;
  std::map<Filter, CohomologyProfile> cache_;
};

/// Every (base face, up-closed filter) pair with realizability, witness and
/// profile. Throws TooLarge past options.max_filters per base face.
std::vector<CohomologyType> enumerate_types(const DecoratedCone& w, const TypologyOptions& options = {});

/// Only the realizable pairs, found by walking the classes of
/// (span(G) ∩ Lambda_C) / Lambda_G for each base face G.
std::vector<CohomologyType> realizable_types(const DecoratedCone& w, const TypologyOptions& options = {});

struct FieldDepth {
  Field field;
  std::size_t depth = 0;
  bool cohen_macaulay = true;
  /// (i, a) with H^i at degree -a nonzero, i < rank; first witness per i.
  std::vector<std::pair<std::size_t, IntVector>> witnesses;
};

struct DepthReport {
  std::size_t rank = 0;
  std::vector<FieldDepth> fields;
  std::size_t type_count = 0;
  /// Union of the torsion primes of all realizable types.
  std::vector<unsigned long> torsion_primes;
  /// Fields over which the ring is not Cohen-Macaulay (hence not Buchsbaum).
  std::vector<Field> not_cm;

  const FieldDepth& at(Field f) const;
};

DepthReport depth_report(const DecoratedCone& w, const std::vector<Field>& fields,
                         const TypologyOptions& options = {});

}  // namespace semimon
