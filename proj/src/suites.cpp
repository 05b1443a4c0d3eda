#include "cliffsym/suites.hpp"

#include <stdexcept>

#include "cliffsym/complete.hpp"
#include "cliffsym/demazure.hpp"
#include "cliffsym/dsymmetric.hpp"
#include "cliffsym/quiver_hecke.hpp"
#include "cliffsym/quotients.hpp"
#include "cliffsym/schubert.hpp"

namespace cliffsym {

int default_max_degree(int n) { return n <= 3 ? 6 : 4; }

static Report suite_nhc(const SuiteParams& p)
{
    Report rep = verify_nhc_relations(p.cfg, p.max_degree, p.mode);
    // ker d_i = im d_i is a statement over C_n; it descends to the
    // quotient C_I only where s_i preserves the killed generators, i.e.
    // when i and i+1 share a parity (otherwise e.g. c_{i+1} lies in the
    // kernel but not in the image).
    for (int i = 1; i <= p.n - 1; ++i)
        if (p.cfg.parity(i) == p.cfg.parity(i + 1)) rep.merge(verify_ker_eq_im(i, p.cfg, p.max_degree));
    rep.normalize();
    return rep;
}

static Report suite_symmetric(const SuiteParams& p)
{
    Report rep = verify_symmetric_all(p.cfg, p.n, p.mode);
    rep.merge(odd_specialization_check(p.n));
    rep.normalize();
    return rep;
}

static Report suite_vanishing(const SuiteParams& p)
{
    Report rep = verify_kappa(p.cfg, p.n);
    rep.merge(verify_vanishing(p.cfg, p.n, p.max_degree));
    rep.merge(mpower_top_row_check(p.cfg, p.n, p.max_degree));
    rep.merge(verify_h_symmetric(p.cfg, p.n, std::min(p.max_degree, 5)));
    rep.normalize();
    return rep;
}

static Report suite_schubert(const SuiteParams& p)
{
    Report rep = verify_schubert_props(p.cfg, p.n, p.mode);
    if (p.cfg.odd_mask() == 0) rep.merge(verify_schubert_classical_oracle(p.cfg, p.n));
    rep.normalize();
    return rep;
}

static Report suite_freeness(const SuiteParams& p)
{
    Report rep = verify_freeness(p.cfg, p.max_degree);
    rep.merge(verify_lambda_equals_kernel(p.cfg, p.max_degree));
    rep.merge(verify_rank_series(p.n, p.order));
    rep.normalize();
    return rep;
}

static Report suite_cyclotomic(const SuiteParams& p)
{
    Report rep = verify_bi_relation(p.cfg, p.n);
    rep.merge(verify_multiplication_matrix(p.cfg, p.n));
    for (int m = 1; m <= std::min(p.n, 3); ++m)
        rep.merge(verify_ideal_equality(p.cfg, p.n, m, std::min(p.max_degree, 6)));
    for (int m = 0; m <= p.n; ++m) rep.merge(verify_grassmann_dimension(p.cfg, p.n, m, p.max_degree));
    rep.merge(verify_coxeter_invariant_series(p.n, std::max(p.order, 12)));
    rep.normalize();
    return rep;
}

static Report suite_flag(const SuiteParams& p)
{
    Report rep;
    // one-step inclusions and lambda endpoints for every interior cut
    for (int k = 1; k <= p.n - 1; ++k) rep.merge(one_step_inclusions(p.cfg, k, p.n));
    rep.merge(verify_lambda_endpoints(p.cfg, p.n));
    // two-block and full flags
    for (int k = 1; k <= p.n - 1; ++k) {
        FlagShape shape{0, k, p.n};
        rep.merge(verify_flag_kernel(p.cfg, shape, std::min(p.max_degree, 6)));
        rep.merge(verify_flag_dimension(p.cfg, shape, p.max_degree));
        rep.merge(verify_flag_iso_identity(p.cfg, k, p.n, p.max_degree));
    }
    {
        FlagShape full;
        for (int i = 0; i <= p.n; ++i) full.push_back(i);
        rep.merge(verify_flag_dimension(p.cfg, full, p.max_degree));
    }
    rep.normalize();
    return rep;
}

static Report suite_quiver(const SuiteParams& p)
{
    Report rep;
    int n = std::min(p.n, 3);
    int deg = std::min(p.max_degree, 4);
    for (auto& C : cartan_battery()) {
        rep.merge(verify_hc_relations(C, n, deg, p.mode));
        rep.merge(verify_iota(C, n, deg, {}, p.mode));
        if (C.size >= 2 && n >= 2) {
            Seq nu;
            for (int t = 0; t < n; ++t) nu.push_back(t < n - 1 ? 1 : 2);
            rep.merge(verify_spanning_independence(C, nu, std::min(3, deg)));
        } else {
            Seq nu(static_cast<size_t>(n), 1);
            rep.merge(verify_spanning_independence(C, nu, std::min(3, deg)));
        }
    }
    rep.normalize();
    return rep;
}

const std::vector<SuiteSpec>& suite_manifest()
{
    static const std::vector<SuiteSpec> manifest = {
        {"nhc", {"verify_nhc_relations", "verify_ker_eq_im", "homotopy_apply"}, suite_nhc},
        {"symmetric", {"verify_symmetric", "odd_specialization_check"}, suite_symmetric},
        {"vanishing", {"verify_vanishing", "mpower_top_row", "kappa", "kappa_tilde", "complete_poly"},
         suite_vanishing},
        {"schubert", {"verify_schubert_props", "schubert"}, suite_schubert},
        {"freeness", {"verify_freeness", "verify_lambda_equals_kernel"}, suite_freeness},
        {"cyclotomic",
         {"b_elements", "verify_bi_relation", "verify_multiplication_matrix", "verify_ideal_equality",
          "grassmann_cohomology"},
         suite_cyclotomic},
        {"flag",
         {"lambda_coeffs", "flag_algebra_generators", "verify_flag_kernel", "one_step_inclusions",
          "flag_cohomology", "verify_flag_iso_identity"},
         suite_flag},
        {"quiver-hecke", {"sigma_apply", "verify_hc_relations", "verify_iota", "iota_image",
                          "verify_spanning_independence"},
         suite_quiver},
    };
    return manifest;
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (auto& s : suite_manifest()) names.push_back(s.name);
    return names;
}

Report run_suite(const std::string& name, const SuiteParams& params)
{
    for (auto& s : suite_manifest())
        if (s.name == name) return s.run(params);
    throw std::invalid_argument("unknown suite: " + name);
}

Report run_all_suites(const SuiteParams& params)
{
    Report rep;
    for (auto& s : suite_manifest()) rep.merge(s.run(params));
    rep.normalize();
    return rep;
}

}  // namespace cliffsym
