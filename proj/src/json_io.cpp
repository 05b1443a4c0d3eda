#include "cliffsym/json_io.hpp"

#include <fstream>

namespace cliffsym {

using nlohmann::json;

json to_json(const QSeries& s)
{
    return json{{"order", s.order()}, {"coeffs", s.coeffs()}};
}

QSeries qseries_from_json(const json& j)
{
    QSeries s(j.at("order").get<int>());
    auto cs = j.at("coeffs").get<std::vector<long long>>();
    for (size_t k = 0; k < cs.size() && k <= static_cast<size_t>(s.order()); ++k)
        s.set_coeff(static_cast<int>(k), cs[k]);
    return s;
}

static json config_json(const ParityConfig& cfg)
{
    std::vector<int> parity;
    for (int i = 1; i <= cfg.n(); ++i) parity.push_back(cfg.parity(i) == Parity::odd ? 1 : 0);
    return json{{"mode", cfg.mode() == CliffMode::full ? "full" : "quotient"}, {"parity", parity}};
}

static ParityConfig config_from_json(const json& j)
{
    auto parity = j.at("parity").get<std::vector<int>>();
    CliffMode mode = j.value("mode", std::string("quotient")) == "full" ? CliffMode::full : CliffMode::quotient;
    return ParityConfig::from_parities(parity, mode);
}

json to_json(const CliffElem& a)
{
    json terms = json::array();
    for (auto& [w, r] : a.terms())
        terms.push_back(json{{"word", word_indices(w)}, {"coeff", r.str()}});
    json out = config_json(a.cfg());
    out["terms"] = std::move(terms);
    return out;
}

CliffElem cliff_from_json(const json& j)
{
    CliffElem a(config_from_json(j));
    for (auto& t : j.at("terms")) {
        CWord w = 0;
        for (int i : t.at("word").get<std::vector<int>>()) w |= 1u << (i - 1);
        a += CliffElem::word(a.cfg(), w, Rat::from_string(t.at("coeff").get<std::string>()));
    }
    return a;
}

json to_json(const PolyCliff& f)
{
    json terms = json::array();
    for (auto& [m, r] : f.terms()) {
        std::vector<int> exps;
        for (int i = 0; i < f.cfg().n(); ++i) exps.push_back(m.e[static_cast<size_t>(i)]);
        terms.push_back(json{{"word", word_indices(m.w)}, {"exps", exps}, {"coeff", r.str()}});
    }
    json out = config_json(f.cfg());
    out["terms"] = std::move(terms);
    return out;
}

PolyCliff poly_from_json(const json& j)
{
    PolyCliff f(config_from_json(j));
    for (auto& t : j.at("terms")) {
        Mono m;
        for (int i : t.at("word").get<std::vector<int>>()) m.w |= 1u << (i - 1);
        auto exps = t.at("exps").get<std::vector<int>>();
        for (size_t k = 0; k < exps.size() && k < kMaxVars; ++k) m.e[k] = static_cast<uint8_t>(exps[k]);
        f.add_term(m, Rat::from_string(t.at("coeff").get<std::string>()));
    }
    return f;
}

json to_json(const Report& r)
{
    json checks = json::array();
    for (auto& c : r.checks) {
        json item{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return json{{"pass", r.all_pass()},
                {"total", r.checks.size()},
                {"failures", r.failure_count()},
                {"checks", std::move(checks)}};
}

CartanData cartan_from_json(const json& j)
{
    CartanData c;
    c.size = j.at("size").get<int>();
    c.parity = j.at("parity").get<std::vector<int>>();
    c.d = j.at("d").get<std::vector<std::vector<int>>>();
    if (j.contains("orientation"))
        for (auto& e : j.at("orientation")) c.arrows.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("t")) {
        for (auto& row : j.at("t")) {
            std::vector<Rat> r;
            for (auto& v : row) {
                if (v.is_string()) r.push_back(Rat::from_string(v.get<std::string>()));
                else
                    r.push_back(Rat(v.get<long>()));
            }
            c.t.push_back(std::move(r));
        }
    }
    c.validate();
    return c;
}

CartanData load_cartan_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Cartan file: " + path);
    json j;
    in >> j;
    return cartan_from_json(j);
}

}  // namespace cliffsym
