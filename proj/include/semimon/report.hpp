#pragma once

// JSON reports for the command-line front end. Every verdict object carries
// "value", "method" ("exact" or "bounded(D)") and "witness".

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semimon/constructions.hpp"
#include "semimon/criteria.hpp"
#include "semimon/monoid.hpp"
#include "semimon/typology.hpp"

namespace semimon {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
  std::optional<Integer> degree_bound;
  std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(3)};
  TypologyOptions typology;
  /// depth_bounds recomputes depth on every face; skipped above this many faces.
  std::size_t depth_bounds_max_faces = 400;
};

/// Parses "q,2,3"; throws ParseError for non-primes.
std::vector<Field> parse_fields(const std::string& text);
/// Parses "0,0,1,-1".
IntVector parse_point(const std::string& text);

Json to_json(std::span<const Integer> v);
Json face_json(const FaceLattice& fl, std::size_t face);

Json analyze_monoid(const AffineMonoid& m, const AnalysisOptions& options);
Json analyze_model(const DecoratedCone& w, const AnalysisOptions& options);
Json cohomology_report(const DecoratedCone& w, std::span<const Integer> a, const std::vector<Field>& fields);
Json construction_report(const ConstructionResult& r, const SimplicialComplex& delta,
                         const std::vector<Field>& fields);

struct CheckOutcome {
  Json report;
  bool passed = true;
};
CheckOutcome check_model(const DecoratedCone& w, const AnalysisOptions& options);
CheckOutcome check_monoid(const AffineMonoid& m, const AnalysisOptions& options);

}  // namespace semimon
