#pragma once

#include "bchresum/ncpoly.hpp"
#include "bchresum/tseries.hpp"

#include <json.hpp>

namespace bchresum {

// Canonical form:
//   {"alphabet":["u","w"],"trunc_degree":8,
//    "terms":[{"word":"wu","t_power":2,"coeff":"1/4"}]}
// Terms are sorted by (t_power, length, lexicographic word); coefficients are
// always "num/den". NCPoly terms carry no "t_power" key.

nlohmann::ordered_json to_json(const NCPoly &p);
nlohmann::ordered_json to_json(const TSeries &s);

NCPoly poly_from_json(const nlohmann::json &j);
TSeries tseries_from_json(const nlohmann::json &j);

} // namespace bchresum
