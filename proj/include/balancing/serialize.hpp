#pragma once

// JSON encoding of the public value types. Big numbers and rationals are
// strings ("p/q", or "p" when q == 1); field order is fixed so that parsing and
// re-dumping reproduces the same bytes.

#include <json.hpp>

#include "balancing/exact.hpp"
#include "balancing/linearize.hpp"
#include "balancing/summation.hpp"

namespace balancing {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const QuadElem& x);
Json to_json(const LinearForm& form);
Json to_json(const ClosedSumExpr& expr);

Rational rational_from_json(const Json& j);
QuadElem quad_from_json(const Json& j);
LinearForm linear_form_from_json(const Json& j);
ClosedSumExpr closed_sum_from_json(const Json& j);

}  // namespace balancing
