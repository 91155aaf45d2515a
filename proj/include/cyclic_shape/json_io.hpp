#pragma once

// JSON schemas for discriminants, matrices and reports. Integers are read
// from JSON numbers or decimal strings; on output, discriminant primes and
// exponents are plain numbers up to 2^53 and strings beyond, while matrix
// entries and coefficients are always strings.

#include <string>

#include <json.hpp>

#include "cyclic_shape/coefficients.hpp"
#include "cyclic_shape/errors.hpp"
#include "cyclic_shape/lattice.hpp"
#include "cyclic_shape/matrix.hpp"
#include "cyclic_shape/ramification.hpp"

namespace cyclic_shape {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed text.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

BigInt bigint_from_json(const Json& j);

/// {"sign": 1, "factors": [[7,6],[13,6],[19,8]]}
FactoredDiscriminant discriminant_from_json(const Json& j);
Json to_json(const FactoredDiscriminant& d);

/// {"dim": n, "rows": [["2318","-1159",...], ...]}
IntMatrix matrix_from_json(const Json& j);
Json to_json(const IntMatrix& M);

/// {"m":9, "assignment":{"7":3,...}, "w":{"3":"91",...}, "f":{"3":"30",...}}
Json to_json(const RamificationProfile& profile);

/// {"a": {"1":"1729",...}, "provenance": {"1":"system",...}}, plus
/// "literal" and "diagnostics" when non-empty.
Json to_json(const CoefficientTable& table);

Json to_json(const IsometryReport& report);

Json error_json(const Error& e);

}  // namespace cyclic_shape
