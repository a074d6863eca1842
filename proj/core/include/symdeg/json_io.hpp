#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "symdeg/andor.hpp"
#include "symdeg/degreelp.hpp"
#include "symdeg/oracle.hpp"
#include "symdeg/properties.hpp"
#include "symdeg/rangexfer.hpp"
#include "symdeg/sympoly.hpp"
#include "symdeg/ypoly.hpp"

namespace symdeg::io {

using Json = nlohmann::ordered_json;

// Polynomial documents carry a "namespace" tag:
//   y: {"namespace":"y","n":N,"m":M,"terms":[{"factors":[[i,j],...],"coeff":"p/q"}]}
//   x: {"namespace":"x","n":N,"terms":[{"factors":[k,...],"coeff":"p/q"}]}
//   z: {"namespace":"z","m":M,"terms":[{"partition":[...],"coeff":"p/q"}]}
// Coefficients are exact "p/q" (or "p") strings. Parsers throw
// std::invalid_argument on any schema violation.

[[nodiscard]] Json to_json(const YPolynomial& p);
[[nodiscard]] Json to_json(const XPolynomial& p);
[[nodiscard]] Json to_json(const SymPolynomial& q);

[[nodiscard]] YPolynomial y_polynomial_from_json(const Json& j);
[[nodiscard]] XPolynomial x_polynomial_from_json(const Json& j);
[[nodiscard]] SymPolynomial sym_polynomial_from_json(const Json& j);

using AnyPolynomial = std::variant<YPolynomial, XPolynomial, SymPolynomial>;
[[nodiscard]] AnyPolynomial polynomial_from_json(const Json& j);

/// {"n": N, "name": "...", "classes": [{"partition": [...], "label": "One"|"Zero"|"Undefined"}]}
[[nodiscard]] PropertySpec property_from_json(const Json& j);

[[nodiscard]] Json to_json(const DegreeCertificate& cert);
[[nodiscard]] Json to_json(const Report& report);
[[nodiscard]] Json to_json(const AndOrBound& bound);
[[nodiscard]] Json to_json(const TransferResult& result);

/// Reads and parses a JSON file; throws std::invalid_argument on I/O or syntax errors.
[[nodiscard]] Json read_file(const std::string& path);

/// Two-space indented dump with a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

}  // namespace symdeg::io
