#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "cliffsym/clifford.hpp"
#include "cliffsym/symgroup.hpp"

namespace cliffsym {

/* Table of elementary d-symmetric polynomials for m <= n' <= n. With
 * `symbolic` the cells keep the gamma factors; otherwise they are
 * evaluated in cfg. All-odd cells render in the x_i = c_i y_i monomial
 * form when the term structure allows it. */
nlohmann::json elementary_table_json(int n, bool symbolic, const ParityConfig& cfg);
std::string elementary_table_text(int n, bool symbolic, const ParityConfig& cfg);

nlohmann::json complete_table_json(const ParityConfig& cfg, int n, int max_m);
std::string complete_table_text(const ParityConfig& cfg, int n, int max_m);

nlohmann::json schubert_table_json(const ParityConfig& cfg, int n, const std::optional<Perm>& only);
std::string schubert_table_text(const ParityConfig& cfg, int n, const std::optional<Perm>& only);

/* x-monomial rendering for the all-odd specialization; falls back to the
 * normal-form string when the term is not an x-monomial. */
std::string odd_x_form(const ParityConfig& cfg, const class PolyCliff& f);

}  // namespace cliffsym
