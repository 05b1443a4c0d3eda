#include "cliffsym/tables.hpp"

#include <sstream>

#include "cliffsym/complete.hpp"
#include "cliffsym/dsymmetric.hpp"
#include "cliffsym/schubert.hpp"

namespace cliffsym {

using nlohmann::json;

std::string odd_x_form(const ParityConfig& cfg, const PolyCliff& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, r] : f.terms()) {
        // x_{k_1}...x_{k_m} normalizes to c^w y^w with no sign, so the
        // x-form exists exactly when the word support equals the
        // exponent support with all exponents one
        bool xform = true;
        for (int i = 0; i < cfg.n(); ++i) {
            bool cbit = (m.w >> i) & 1u;
            if ((cbit && m.e[static_cast<size_t>(i)] != 1) || (!cbit && m.e[static_cast<size_t>(i)] != 0))
                xform = false;
        }
        std::string body;
        if (xform && m.w) {
            std::ostringstream b;
            for (int i : word_indices(m.w)) b << "x" << i;
            body = b.str();
        } else if (m.w == 0 && m.degree() == 0) {
            body = "";
        } else {
            return f.str();  // not an x-monomial sum; fall back entirely
        }
        std::string rs = r.str();
        if (!first) {
            if (!rs.empty() && rs[0] == '-') {
                os << " - ";
                rs = rs.substr(1);
            } else
                os << " + ";
        }
        if (body.empty()) os << rs;
        else if (rs == "1")
            os << body;
        else if (rs == "-1")
            os << "-" << body;
        else
            os << rs << "*" << body;
        first = false;
    }
    return os.str();
}

static std::string cell_string(int n, int m, bool symbolic, const ParityConfig& cfg)
{
    if (symbolic) {
        SymElem e = elem_symbolic(n, m);
        std::ostringstream os;
        for (size_t t = 0; t < e.size(); ++t) os << (t ? " + " : "") << sym_term_str(e[t]);
        return os.str();
    }
    PolyCliff p = elem_poly(cfg, n, m);
    bool all_odd = cfg.odd_mask() == (cfg.n() >= 32 ? ~0u : (1u << cfg.n()) - 1);
    return all_odd ? odd_x_form(cfg, p) : p.str();
}

json elementary_table_json(int n, bool symbolic, const ParityConfig& cfg)
{
    json cells = json::array();
    for (int nn = 1; nn <= n; ++nn)
        for (int m = 1; m <= nn; ++m)
            cells.push_back(json{{"n", nn}, {"m", m}, {"value", cell_string(nn, m, symbolic, cfg)}});
    return json{{"table", "elementary"},
                {"n", n},
                {"parities", symbolic ? "symbolic" : cfg.str()},
                {"cells", std::move(cells)}};
}

std::string elementary_table_text(int n, bool symbolic, const ParityConfig& cfg)
{
    std::ostringstream os;
    for (int nn = 1; nn <= n; ++nn)
        for (int m = 1; m <= nn; ++m)
            os << "e(" << nn << ")_" << m << " = " << cell_string(nn, m, symbolic, cfg) << "\n";
    return os.str();
}

json complete_table_json(const ParityConfig& cfg, int n, int max_m)
{
    MPowerTable t(cfg, n);
    json cells = json::array();
    for (int m = 0; m <= max_m; ++m)
        cells.push_back(json{{"m", m}, {"value", t.power(m).a[0][0].str()}});
    return json{{"table", "complete"}, {"n", n}, {"parities", cfg.str()}, {"cells", std::move(cells)}};
}

std::string complete_table_text(const ParityConfig& cfg, int n, int max_m)
{
    MPowerTable t(cfg, n);
    std::ostringstream os;
    for (int m = 0; m <= max_m; ++m) os << "h(" << n << ")_" << m << " = " << t.power(m).a[0][0].str() << "\n";
    return os.str();
}

json schubert_table_json(const ParityConfig& cfg, int n, const std::optional<Perm>& only)
{
    json cells = json::array();
    if (only) {
        cells.push_back(json{{"w", only->images()}, {"value", schubert(cfg, *only).str()}});
    } else {
        SchubertTable st(cfg, n);
        for (auto& [w, s] : st.table())
            cells.push_back(json{{"w", w.images()}, {"length", length(w)}, {"value", s.str()}});
    }
    return json{{"table", "schubert"}, {"n", n}, {"parities", cfg.str()}, {"cells", std::move(cells)}};
}

std::string schubert_table_text(const ParityConfig& cfg, int n, const std::optional<Perm>& only)
{
    std::ostringstream os;
    if (only) {
        os << "s_" << only->str() << " = " << schubert(cfg, *only).str() << "\n";
        return os.str();
    }
    SchubertTable st(cfg, n);
    for (auto& [w, s] : st.table()) os << "s_" << w.str() << " = " << s.str() << "\n";
    return os.str();
}

}  // namespace cliffsym
