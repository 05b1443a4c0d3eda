#include "cliffsym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "cliffsym/json_io.hpp"
#include "cliffsym/qseries.hpp"
#include "cliffsym/quotients.hpp"
#include "cliffsym/suites.hpp"
#include "cliffsym/tables.hpp"

namespace cliffsym {

namespace {

int env_order(int fallback)
{
    const char* v = std::getenv("CLIFFSYM_ORDER");
    if (!v) return fallback;
    int k = std::atoi(v);
    return k > 0 ? k : fallback;
}

struct ParitySpec {
    bool symbolic = false;
    std::string raw = "all-even";

    ParityConfig config(int n) const
    {
        if (raw == "all-even") return ParityConfig::all_even(n);
        if (raw == "all-odd") return ParityConfig::all_odd(n);
        if (raw == "full") return ParityConfig::full(n);
        std::vector<int> bits;
        std::string token;
        std::istringstream in(raw);
        while (std::getline(in, token, ',')) {
            if (token == "odd" || token == "1") bits.push_back(1);
            else if (token == "even" || token == "0")
                bits.push_back(0);
            else
                throw CLI::ValidationError("--parities", "expected odd/even/1/0 list or all-even/all-odd");
        }
        if (static_cast<int>(bits.size()) != n)
            throw CLI::ValidationError("--parities", "parity list length must equal n");
        return ParityConfig::from_parities(bits);
    }
};

void emit_report(const Report& rep, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << to_json(rep).dump(2) << "\n";
        return;
    }
    for (auto& c : rep.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty()) out << "  [" << c.detail << "]";
        out << "\n";
    }
    out << (rep.all_pass() ? "OK " : "FAILED ") << rep.summary() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"cliffsym: Clifford polynomial superalgebra toolkit"};
    app.require_subcommand(1);

    std::string parities = "all-even";
    std::string format = "text";
    int n = 2, m = 4, k = 1, max_degree = -1;
    int order = env_order(kDefaultQOrder);
    bool serial = false;
    std::string cartan_file, shape_str, w_str;

    auto add_common = [&](CLI::App* cmd, bool with_degree = false) {
        cmd->add_option("--n", n, "number of indeterminates");
        cmd->add_option("--parities", parities, "all-even | all-odd | comma list (odd,even,...)");
        cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--order", order, "q-series truncation order");
        if (with_degree) cmd->add_option("--max-degree", max_degree, "degree bound for exhaustive checks");
        cmd->add_flag("--serial", serial, "run the serial reference kernels");
    };

    // tables
    auto* tables = app.add_subcommand("tables", "emit the polynomial tables");
    auto* t_elem = tables->add_subcommand("elementary", "elementary d-symmetric polynomials");
    add_common(t_elem);
    auto* t_comp = tables->add_subcommand("complete", "complete symmetric polynomials");
    add_common(t_comp);
    t_comp->add_option("--m", m, "maximal degree");
    auto* t_schub = tables->add_subcommand("schubert", "d-Schubert polynomials");
    add_common(t_schub);
    t_schub->add_option("--w", w_str, "single permutation as image list, e.g. 2,3,1");

    // top-level aliases from the module interfaces
    auto* alias_complete = app.add_subcommand("complete", "alias of tables complete");
    add_common(alias_complete);
    alias_complete->add_option("--m", m, "maximal degree");
    auto* alias_schubert = app.add_subcommand("schubert", "alias of tables schubert");
    add_common(alias_schubert);
    alias_schubert->add_option("--w", w_str, "single permutation as image list");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<CLI::App*> verify_cmds;
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    for (auto& name : names) {
        auto* cmd = verify->add_subcommand(name, "suite " + name);
        add_common(cmd, true);
        if (name == "quiver-hecke" || name == "all")
            cmd->add_option("--cartan", cartan_file, "Cartan datum JSON file");
        verify_cmds.push_back(cmd);
    }

    // rank
    auto* rank = app.add_subcommand("rank", "graded rank series");
    auto* r_polc = rank->add_subcommand("polc", "rank of PolC");
    add_common(r_polc);
    auto* r_lambda = rank->add_subcommand("lambda", "rank of the d-symmetric subalgebra");
    add_common(r_lambda);
    auto* r_coh = rank->add_subcommand("cohomology", "q-binomial rank of the Grassmann quotient");
    add_common(r_coh);
    r_coh->add_option("--k", k, "subspace dimension");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "quotient ring dimensions");
    auto* c_grass = coh->add_subcommand("grassmann", "Clifford Grassmann cohomology");
    add_common(c_grass, true);
    c_grass->add_option("--k", k, "subspace dimension");
    auto* c_flag = coh->add_subcommand("flag", "Clifford flag cohomology");
    add_common(c_flag, true);
    c_flag->add_option("--shape", shape_str, "flag shape, e.g. 0,1,3");

    std::vector<const char*> argv;
    argv.push_back("cliffsym");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        ExecMode mode = serial ? ExecMode::serial : ExecMode::parallel;
        if (max_degree < 0) max_degree = default_max_degree(n);

        if (t_elem->parsed() || tables->got_subcommand(t_elem)) {
            bool symbolic = parities == "symbolic";
            ParityConfig cfg = symbolic
                                   ? ParityConfig::all_even(n)
                                   : (parities == "all-odd" ? ParityConfig::all_odd(n, Parity::odd)
                                                            : ParitySpec{false, parities}.config(n));
            if (format == "json") out << elementary_table_json(n, symbolic, cfg).dump(2) << "\n";
            else
                out << elementary_table_text(n, symbolic, cfg);
            return 0;
        }
        if (t_comp->parsed() || alias_complete->parsed()) {
            ParityConfig cfg = ParitySpec{false, parities}.config(n);
            if (format == "json") out << complete_table_json(cfg, n, m).dump(2) << "\n";
            else
                out << complete_table_text(cfg, n, m);
            return 0;
        }
        if (t_schub->parsed() || alias_schubert->parsed()) {
            ParityConfig cfg = ParitySpec{false, parities}.config(n);
            std::optional<Perm> only;
            if (!w_str.empty()) {
                std::vector<int> img;
                std::istringstream in(w_str);
                std::string tok;
                while (std::getline(in, tok, ',')) img.push_back(std::stoi(tok));
                only = Perm(img);
            }
            if (format == "json") out << schubert_table_json(cfg, n, only).dump(2) << "\n";
            else
                out << schubert_table_text(cfg, n, only);
            return 0;
        }

        if (verify->parsed()) {
            SuiteParams params;
            params.n = n;
            params.cfg = ParitySpec{false, parities}.config(n);
            params.max_degree = max_degree;
            params.order = order;
            params.mode = mode;
            Report rep;
            std::string chosen;
            for (size_t i = 0; i < verify_cmds.size(); ++i)
                if (verify_cmds[i]->parsed()) chosen = names[i];
            if (chosen.empty()) {
                err << "usage error: verify needs a suite name\n";
                return 2;
            }
            if (!cartan_file.empty()) {
                CartanData C = load_cartan_file(cartan_file);
                rep = verify_hc_relations(C, std::min(n, 3), std::min(max_degree, 4), params.mode);
                rep.merge(verify_iota(C, std::min(n, 3), std::min(max_degree, 4), {}, params.mode));
                rep.normalize();
            } else if (chosen == "all") {
                rep = run_all_suites(params);
            } else {
                rep = run_suite(chosen, params);
            }
            emit_report(rep, format, out);
            return rep.all_pass() ? 0 : 1;
        }

        if (r_polc->parsed()) {
            out << to_json(geometric_inverse(n, order)).dump(2) << "\n";
            return 0;
        }
        if (r_lambda->parsed()) {
            QSeries s = QSeries::one(order).divided_by(qfactorial(n, order) * one_minus_q(order).pow(n));
            out << to_json(s).dump(2) << "\n";
            return 0;
        }
        if (r_coh->parsed()) {
            out << to_json(qbinomial(n, k, order)).dump(2) << "\n";
            return 0;
        }

        if (c_grass->parsed()) {
            ParityConfig cfg = ParitySpec{false, parities}.config(n);
            int bound = std::min(order, max_degree > 0 ? std::max(order, max_degree) : order);
            QuotientRing q = grassmann_cohomology(cfg, n, k, bound);
            nlohmann::json j{{"ring", "grassmann"},
                             {"n", n},
                             {"k", k},
                             {"dims", q.quotient_dims},
                             {"expected", to_json(qbinomial(n, k, bound).scaled(
                                              1ll << cfg.prefix(std::min(k, n)).active_count()))}};
            out << j.dump(2) << "\n";
            return 0;
        }
        if (c_flag->parsed()) {
            ParityConfig cfg = ParitySpec{false, parities}.config(n);
            FlagShape shape;
            std::istringstream in(shape_str);
            std::string tok;
            while (std::getline(in, tok, ',')) shape.push_back(std::stoi(tok));
            QuotientRing q = flag_cohomology(cfg, shape, order);
            std::vector<int> parts;
            for (size_t i = 1; i < shape.size(); ++i) parts.push_back(shape[i] - shape[i - 1]);
            nlohmann::json j{{"ring", "flag"},
                             {"n", n},
                             {"shape", shape},
                             {"dims", q.quotient_dims},
                             {"expected", to_json(qmultinomial(n, parts, order).scaled(
                                              1ll << cfg.active_count()))}};
            out << j.dump(2) << "\n";
            return 0;
        }

        err << "usage error: no actionable subcommand\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cliffsym
