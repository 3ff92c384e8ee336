#pragma once
/**
 * @file serialize.hpp
 * @brief JSON views of the exact types.
 *
 * Rationals are strings "num/den" (den omitted when 1), polynomials are
 * arrays of such strings in ascending degree, piecewise densities are
 * {"breakpoints": [...], "pieces": [[...], ...]}.
 */

#include <json.hpp>

#include "arpl/piecewise.hpp"
#include "arpl/polynomial.hpp"
#include "arpl/rational.hpp"

namespace arpl {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json piecewise_to_json(const PiecewisePoly& f);
PiecewisePoly piecewise_from_json(const Json& j);

}  // namespace arpl
