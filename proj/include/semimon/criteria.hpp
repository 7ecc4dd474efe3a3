#pragma once

// Lattice-level verdicts: Serre's condition (S2), sufficient conditions for
// Cohen-Macaulayness, depth bounds, Frobenius-bad primes and the Gorenstein
// test for Cohen-Macaulay seminormal models.

#include <optional>
#include <string>
#include <vector>

#include "semimon/monoid.hpp"
#include "semimon/typology.hpp"

namespace semimon {

struct S2Verdict {
  bool holds = true;
  std::optional<std::size_t> failing_face;
};

/// Lambda_F == span(F) ∩ (intersection of Lambda over facets containing F)
/// for every proper face F.
S2Verdict s2_lattice_test(const DecoratedCone& w);

/// First x in relint cn(M) ∩ gp(M) of degree <= bound outside M.
std::optional<IntVector> interior_hypothesis_counterexample(const AffineMonoid& m, const Integer& bound);

/// Membership in M' (intersection of the facet localizations); throws
/// HypothesisUnverified when gp(M) ∩ relint cn(M) ⊄ M is detected up to bound.
bool m_prime_member(const AffineMonoid& m, std::span<const Integer> x, const Integer& bound);

struct BoundedS2Verdict {
  bool s2_up_to = true;
  Integer bound;
  std::optional<IntVector> witness;  ///< in M' but not in M
};
BoundedS2Verdict s2_up_to(const AffineMonoid& m, const Integer& bound);

struct CMCriterion {
  bool applies = false;  ///< true: Cohen-Macaulay over every field
  std::optional<std::size_t> failing_face;
};

/// Every facet submonoid normal.
CMCriterion normal_facets_cm(const DecoratedCone& w);

struct SimpleConeVerdict {
  bool applies = false;
  bool s2 = false;
  std::vector<bool> simple;  ///< per face id
  std::optional<std::size_t> non_simple_ray;
};
/// Every ray simple and (S2).
SimpleConeVerdict simple_cone_cm(const DecoratedCone& w);

/// Face submonoid M ∩ F is normal: Lambda_G == Lambda_F ∩ span(G) for G ⊆ F.
bool face_is_normal(const DecoratedCone& w, std::size_t face);
/// Largest i with every face of dimension <= i normal.
std::size_t normality_index(const DecoratedCone& w);

struct DepthBounds {
  std::size_t depth = 0;
  std::size_t c_k = 0;  ///< largest i with every face of dim <= i Cohen-Macaulay
  std::size_t n = 0;    ///< normality_index
  bool chain_holds = false;  ///< depth >= c_k >= min(n + 1, rank)
};
DepthBounds depth_bounds(const DecoratedCone& w, Field field, const TypologyOptions& options = {});

/// Primes p such that K[M] is not F-injective in characteristic p.
std::vector<unsigned long> f_bad_primes(const DecoratedCone& w);

struct GorensteinVerdict {
  bool gorenstein = false;
  std::optional<IntVector> b;
  std::vector<Integer> gamma;  ///< per support form
  std::string reason;
};
/// Throws NotCM unless cohen_macaulay is set.
GorensteinVerdict gorenstein_check(const DecoratedCone& w, bool cohen_macaulay);

}  // namespace semimon
