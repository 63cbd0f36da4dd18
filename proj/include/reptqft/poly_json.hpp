#pragma once

#include "json.hpp"
#include "reptqft/laurent_poly.hpp"

namespace reptqft {

/// [[a, b, "coefficient"], ...] in display order.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace reptqft
