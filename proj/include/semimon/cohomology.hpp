#pragma once

// The cochain complex over an up-closed set of faces (a filter), with
// differentials given by the incidence function, and its cohomology over Q
// and prime fields.

#include <map>
#include <string>
#include <vector>

#include "semimon/monoid.hpp"
#include "semimon/polyhedral.hpp"
#include "semimon/sparse.hpp"

namespace semimon {

/// Q when characteristic == 0, otherwise the prime field F_p.
struct Field {
  unsigned long characteristic = 0;

  static Field rationals() { return {}; }
  static Field prime(unsigned long p) { return {p}; }
  bool is_rationals() const noexcept { return characteristic == 0; }
  std::string name() const;
  friend auto operator<=>(const Field&, const Field&) = default;
};

/// Sorted face ids.
using Filter = std::vector<std::size_t>;

bool is_up_closed(const FaceLattice& fl, const Filter& filter);
/// {F : a in F and a in Lambda_F}; throws OutOfRange unless a lies in the cone
/// and in Lambda_C.
Filter filter_at(const DecoratedCone& w, std::span<const Integer> a);

struct CochainComplex {
  std::size_t top = 0;                             ///< dim C
  std::vector<std::vector<std::size_t>> cells;     ///< cells[t]: filter faces of dim t
  std::vector<SparseMatrix> differential;          ///< differential[t]: C^t -> C^{t+1}
};

/// Throws NotUpClosed. The epsilon table defaults to the lattice's own.
CochainComplex cochain_complex(const FaceLattice& fl, const Filter& filter);
CochainComplex cochain_complex(const FaceLattice& fl, const Filter& filter,
                               const std::vector<std::vector<int>>& epsilon);
/// Every composite differential[t+1] * differential[t] vanishes.
bool squares_to_zero(const CochainComplex& c);

std::vector<std::size_t> cohomology_dims(const CochainComplex& c, Field field);
/// Primes dividing a Smith invariant of some differential.
std::vector<unsigned long> torsion_primes(const CochainComplex& c);

struct CohomologyProfile {
  std::vector<std::size_t> dims_q;
  std::map<unsigned long, std::vector<std::size_t>> dims_p;
  std::vector<unsigned long> torsion_primes;

  /// Dimensions over any field: stored values, or dims_q for primes that are
  /// not torsion primes.
  std::vector<std::size_t> dims(Field field) const;
  /// Least i with a nonzero dimension over the field (top + 1 if none).
  std::size_t first_nonzero(Field field) const;
  friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

/// Cohomology over Q, over the requested primes and over every torsion prime.
CohomologyProfile profile_of(const CochainComplex& c, const std::vector<unsigned long>& primes);
CohomologyProfile local_cohomology_at(const DecoratedCone& w, std::span<const Integer> a,
                                      const std::vector<unsigned long>& primes);
/// a in cone ∩ Lambda_C and a in no facet lattice.
bool top_support_member(const DecoratedCone& w, std::span<const Integer> a);

}  // namespace semimon
