#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "bezout/debranges.hpp"
#include "bezout/exact.hpp"
#include "bezout/interpolation.hpp"
#include "bezout/poly.hpp"

namespace bezout {

using ordered_json = nlohmann::ordered_json;

/// Accepted polynomial encodings (ascending degree):
///   [1, -0.5, 0]              plain reals
///   [[1, 0], [0, 1]]          [re, im] pairs
///   {"re": [...], "im": [...]} canonical object (im optional)
///   {"num_re": [...], "den_re": [...], "num_im": [...], "den_im": [...]}
Polynomial poly_from_json(const nlohmann::json& j);

/// Canonical {"re":[...],"im":[...]} object.
ordered_json poly_to_json(const Polynomial& p);

/// Canonical object extended with exact integer ratio arrays. Components that
/// do not fit in 64 bits are emitted as decimal strings.
ordered_json exact_poly_to_json(const ExactPolynomial& p);

/// Same encodings as poly_from_json but numbers are parsed from their decimal
/// literals, so the result is exact. Raises ExactUnavailable for non-numeric
/// payloads (NaN/Inf and the like).
ExactPolynomial exact_poly_from_json_text(std::string_view text);

Complex complex_from_json(const nlohmann::json& j);  // number or [re, im]

RationalFunction ratfun_from_json(const nlohmann::json& j);  // {"num":..., "den":...}
ordered_json ratfun_to_json(const RationalFunction& f);

/// {"nodes":[...], "orders":[...], "targets":[[...], ...]}
HermiteData hermite_from_json(const nlohmann::json& j);

}  // namespace bezout
