// semimon: analyze affine monoids and decorated cones, print cohomology at a
// degree, build a model from a simplicial complex, run the invariant suite.
//
// Exit status: 0 success, 1 other failure or invariant violation, 2 parse
// error, 3 size limit or failed construction.

#include <fstream>
#include <iostream>
#include <variant>

#include <CLI11.hpp>

#include "semimon/error.hpp"
#include "semimon/io.hpp"
#include "semimon/report.hpp"

using namespace semimon;

namespace {

using Input = std::variant<AffineMonoid, DecoratedCone, SimplicialComplex>;

Input load(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) {
    try {
      return builtin(source.substr(8));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  const std::string text = read_text_file(source);
  switch (detect_input(text)) {
    case InputKind::Monoid:
      try {
        return parse_monoid(text);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ParseError, e.what());
      }
    case InputKind::Model:
      return parse_model(text);
    case InputKind::Complex:
      return parse_complex(text);
  }
  throw Error(ErrorKind::ParseError, "unrecognized input");
}

DecoratedCone as_model(Input& in) {
  if (auto* m = std::get_if<AffineMonoid>(&in)) return to_model(*m);
  if (auto* w = std::get_if<DecoratedCone>(&in)) return *w;
  throw Error(ErrorKind::ParseError, "expected a monoid or a model, got a simplicial complex");
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
      return 2;
    case ErrorKind::TooLarge:
    case ErrorKind::VerificationFailed:
      return 3;
    default:
      return 1;
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seminormal affine monoid rings: depth, (S2), Cohen-Macaulay and Gorenstein tests"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string degree_bound, fields_text = "q,2,3";
  std::size_t max_filters = TypologyOptions{}.max_filters;
  bool seed_free = false;
  app.add_option("--degree-bound", degree_bound, "degree bound D for bounded verdicts");
  app.add_option("--fields", fields_text, "comma-separated fields: q and primes");
  app.add_option("--max-filters", max_filters, "up-closed sets per base face before giving up");
  app.add_flag("--seed-free", seed_free, "accepted for compatibility; nothing is random");

  std::string input, at, out;
  auto* analyze = app.add_subcommand("analyze", "full report for a monoid or model");
  analyze->add_option("input", input, "file or builtin:NAME")->required();
  auto* cohomology = app.add_subcommand("cohomology", "local cohomology at degree -a");
  cohomology->add_option("input", input, "file or builtin:NAME")->required();
  cohomology->add_option("--at", at, "a as comma-separated integers")->required();
  auto* construct = app.add_subcommand("construct", "model from a simplicial complex (facet list file)");
  construct->add_option("delta", input, "facet list file")->required();
  construct->add_option("-o,--output", out, "write the model here");
  auto* check = app.add_subcommand("check", "run the invariant suite");
  check->add_option("input", input, "file or builtin:NAME")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    AnalysisOptions options;
    options.fields = parse_fields(fields_text);
    options.typology.max_filters = max_filters;
    if (!degree_bound.empty()) {
      Integer d;
      if (d.set_str(degree_bound, 10) != 0 || sgn(d) < 0)
        throw Error(ErrorKind::ParseError, "bad degree bound: " + degree_bound);
      options.degree_bound = d;
    }

    Input in = load(input);
    if (*analyze) {
      if (auto* m = std::get_if<AffineMonoid>(&in))
        emit(analyze_monoid(*m, options));
      else
        emit(analyze_model(as_model(in), options));
      return 0;
    }
    if (*cohomology) {
      const DecoratedCone w = as_model(in);
      const IntVector a = parse_point(at);
      if (a.size() != w.ambient_dim())
        throw Error(ErrorKind::ParseError, "degree has " + std::to_string(a.size()) + " entries, expected " +
                                               std::to_string(w.ambient_dim()));
      emit(cohomology_report(w, a, options.fields));
      return 0;
    }
    if (*construct) {
      const auto* delta = std::get_if<SimplicialComplex>(&in);
      if (!delta) throw Error(ErrorKind::ParseError, "expected a facet list");
      const ConstructionResult r = delta_construct(*delta);
      for (const auto& line : r.log) std::cerr << line << "\n";
      if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw Error(ErrorKind::OutOfRange, "cannot write " + out);
        f << "# distinguished degree: " << to_string(r.distinguished_degree) << "\n" << write_model(r.model);
        std::cerr << "model written to " << out << "\n";
      }
      emit(construction_report(r, *delta, options.fields));
      return 0;
    }
    if (*check) {
      CheckOutcome c;
      if (auto* m = std::get_if<AffineMonoid>(&in))
        c = check_monoid(*m, options);
      else
        c = check_model(as_model(in), options);
      emit(c.report);
      return c.passed ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
