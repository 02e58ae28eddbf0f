#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "unital/algebra.hpp"
#include "unital/field.hpp"
#include "unital/identities.hpp"
#include "unital/modules.hpp"
#include "unital/multipoly.hpp"
#include "unital/unitsearch.hpp"

namespace unital {

using Json = nlohmann::json;

// Field descriptors: {"kind":"prime","p":5} | {"kind":"ext","p":2,"modulus":[1,1,1]}
// | {"kind":"rational"}. Modulus coefficients are listed low-to-high.
Field field_from_json(const Json& j);
Json field_to_json(const Field& f);

// Elements: integer (prime), coefficient array low-to-high (extension),
// "num/den" string (rational; plain integers also accepted on input).
Elem elem_from_json(const Field& f, const Json& j);
Json elem_to_json(const Elem& e);

std::vector<Elem> vector_from_json(const Field& f, const Json& j);
Json vector_to_json(const std::vector<Elem>& v);

Mat matrix_from_json(const Field& f, const Json& j);
Json matrix_to_json(const Mat& m);

// {"nvars":2,"terms":[{"exp":[1,1],"coef":...},...]}
MultiPoly poly_from_json(const Field& f, const Json& j);
Json poly_to_json(const MultiPoly& p);

// {"field":...,"dim":n,"one":[...],"c":[{"i":..,"j":..,"k":..,"coef":..},...]}
// or one of the shorthands {"field":...,"matrix":{"m":2}},
// {"field":...,"group":{"table":[[...]]}}, {"field":...,"split":{"n":3}}.
// Indices are 0-based.
Algebra algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra& a);

// {"generators":[[...],...],"coeffs":"prime"|"subfield"}
Subgroup subgroup_from_json(const Field& f, const Json& j);
Json subgroup_to_json(const Subgroup& h);

// {"algebra":...,"dim":d,"action":[matrix,...]}
AModule module_from_json(const Json& j);
Json module_to_json(const AModule& m);

GridSpec grid_from_json(const Field& f, const Json& j);
Json grid_to_json(const GridSpec& g);

mpz_class integer_from_json(const Json& j);
Json integer_to_json(const mpz_class& z);

/// Canonical serialization used by the CLI: sorted keys, two-space indent,
/// trailing newline. Identical inputs produce byte-identical output.
std::string dump_canonical(const Json& j);

} // namespace unital
