#pragma once

#include "arrcrit/arrangement.hpp"
#include "arrcrit/critical.hpp"
#include "arrcrit/os_algebra.hpp"
#include "arrcrit/singular_rank.hpp"
#include "arrcrit/weights.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace arrcrit::io {

using json = nlohmann::ordered_json;

json read_json_file(const std::string& path);

Field parse_field(const json& doc);
json field_to_json(Field f);

/// {"field": {...}, "forms": [["1","0","0"], ...]}
Arrangement parse_arrangement(const json& doc);
json arrangement_to_json(const Arrangement& arr);

/// Integers or integer strings.
long parse_integer(const json& v);
/// Numbers, "a/b" strings, or "[c0,...]" strings.
Scalar parse_scalar_value(const json& v, Field field);
std::vector<Scalar> parse_scalar_vector(const json& v, Field field);
json scalars_to_json(const std::vector<Scalar>& v);

/// {"rows": [[...], ...]}
WeightBasis parse_weights(const json& doc, int size);
json weights_to_json(const WeightBasis& w);

/// {"blocks": [[...], ...], "mult": {"0": 1, ...}}; missing multiplicities are 1.
Multinet parse_multinet(const json& doc, int size);

/// {"coords": [...]} or a bare array.
ProjectivePoint parse_point(const json& doc, Field field);

json indices_to_json(const IndexSet& s);
json flats_to_json(const std::vector<Flat>& flats);
json os_element_to_json(const OSElement& e);
json polynomial_to_json(const Polynomial& p);
json equation_to_json(const CriticalEquation& eq);

} // namespace arrcrit::io
