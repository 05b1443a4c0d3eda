#pragma once

#include <json.hpp>

#include <string>

#include "cliffsym/polyclifford.hpp"
#include "cliffsym/qseries.hpp"
#include "cliffsym/quiver_hecke.hpp"
#include "cliffsym/report.hpp"

namespace cliffsym {

nlohmann::json to_json(const QSeries& s);  // {"order": N, "coeffs": [...]}
QSeries qseries_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CliffElem& a);  // {"mode","parity","terms":[{"word","coeff"}]}
CliffElem cliff_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PolyCliff& f);  // {"mode","parity","terms":[{"word","exps","coeff"}]}
PolyCliff poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);

/* CartanData file format:
 * {"size":2,"parity":[1,0],"d":[[2,-2],[-2,2]],"orientation":[[1,2]],"t":optional} */
CartanData cartan_from_json(const nlohmann::json& j);
CartanData load_cartan_file(const std::string& path);

}  // namespace cliffsym
