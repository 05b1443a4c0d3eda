#pragma once

#include <map>

#include "cliffsym/dsymmetric.hpp"
#include "cliffsym/qseries.hpp"

namespace cliffsym {

/* Staircase monomial y_1^{n-1} y_2^{n-2} ... y_{n-1}. */
PolyCliff staircase(const ParityConfig& cfg, int n);

/* d-Schubert polynomial s_w = d_{w^{-1} w_0}(staircase). */
PolyCliff schubert(const ParityConfig& cfg, const Perm& w);

/* All of S_n at once, with deg s_w = l(w) asserted. */
class SchubertTable {
  public:
    SchubertTable(ParityConfig cfg, int n);
    const ParityConfig& cfg() const { return cfg_; }
    const std::map<Perm, PolyCliff>& table() const { return tab_; }
    const PolyCliff& at(const Perm& w) const { return tab_.at(w); }

  private:
    ParityConfig cfg_;
    std::map<Perm, PolyCliff> tab_;
};

/* The three cases of the pairing relation for all (v, w) in S_n^2:
 * d_v s_w is a C_I-unit when v = w^{-1}; 0 when l(v) = l(w), v != w^{-1};
 * 0 when l(v) > l(w). Also d_v s_w = s_{w v^{-1}} on reduced products,
 * reduced-word independence of d_w, deg s_w = l(w), and s_e a unit. */
Report verify_schubert_props(const ParityConfig& cfg, int n, ExecMode mode = ExecMode::serial);

/* Positive-convention classical divided difference on the all-even
 * specialization; independent oracle for the signed comparison
 * s_w = (-1)^{l(w_0)-l(w)} S^{classical}_w. */
Report verify_schubert_classical_oracle(const ParityConfig& cfg, int n);

/* Degreewise bijectivity of Lambda (x) H -> PolC: the products
 * {c^w e-monomial h-monomial} of each degree d <= max_degree are linearly
 * independent and count dim PolC_d; the Schubert set spans H degreewise;
 * e-monomials are independent with ranks matching 1/((n)_q!(1-q)^n). */
Report verify_freeness(const ParityConfig& cfg, int max_degree);

/* Degreewise rank of the e-generated subalgebra equals the dimension of
 * the joint Demazure kernel. */
Report verify_lambda_equals_kernel(const ParityConfig& cfg, int max_degree);

/* QSeries bookkeeping: rk H = (n)_q!, rk Lambda = 1/((n)_q!(1-q)^n),
 * and the endomorphism rank identity (n)_q!^2/((n)_q!(1-q)^n)
 * = (n)_q!/(1-q)^n. */
Report verify_rank_series(int n, int order);

}  // namespace cliffsym
