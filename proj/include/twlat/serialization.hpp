// JSON forms of field elements, ideals, lattices and chains.
//
// Ideal file: {"p", "e", "modulus" (e > 1 only, c_0..c_e), "n", "N",
// "generators": [{"level": l, "terms": [[i, j, c], ...]}, ...]} with 1-based i,
// 0-based j, terms ordered by (i, j), zero terms omitted. A coefficient is an
// integer when e = 1 and a digit list (constant digit first) otherwise.
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "twlat/graded_ideals.hpp"
#include "twlat/lattices.hpp"

namespace twlat {

using Json = nlohmann::ordered_json;

/// Raised for structurally invalid input; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Json& j, const FieldParams& field, const std::string& where = "coefficient");

Json field_header(const FieldParams& field);
/// Reads p, e and the optional modulus.
FieldParams field_from_json(const Json& j);

Json ideal_to_json(const TwistedLinearIdeal& I);
TwistedLinearIdeal ideal_from_json(const Json& j);
/// Parses text; syntax errors report the line and column.
TwistedLinearIdeal ideal_from_text(const std::string& text);

Json vector_to_json(const Vector& v);
Json lattice_to_json(const Lattice& L);
Json chain_to_json(const LatticeChain& chain);

}  // namespace twlat
