#pragma once

// Text formats.
//
//   monoid <m>            model <m>              facet lists
//   <generator>           <extreme ray>          <v> <v> ...
//   ...                   ...                    ...
//                         degree <form>          (optional)
//                         group                  (optional; default the
//                         <basis row> ...         saturated span)
//                         face <i> <j> ...       (sorted extreme-ray indices)
//                         <basis row> ...
//
// '#' starts a comment. Faces without a block get span(G) ∩ group ∩ the
// lattices of all listed faces containing G.

#include <string>
#include <string_view>

#include "semimon/constructions.hpp"
#include "semimon/monoid.hpp"

namespace semimon {

enum class InputKind { Monoid, Model, Complex };

std::string read_text_file(const std::string& path);
InputKind detect_input(std::string_view text);

AffineMonoid parse_monoid(std::string_view text);
std::string write_monoid(const AffineMonoid& m);

/// Throws ParseError, including for lattice assignments a DecoratedCone
/// rejects (wrong rank, not monotone).
DecoratedCone parse_model(std::string_view text);
std::string write_model(const DecoratedCone& w);

SimplicialComplex parse_complex(std::string_view text);

}  // namespace semimon
