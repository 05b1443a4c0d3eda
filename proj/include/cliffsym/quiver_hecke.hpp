#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffsym/demazure.hpp"
#include "cliffsym/polyclifford.hpp"
#include "cliffsym/report.hpp"

namespace cliffsym {

/* Generalised super Cartan datum: d_ii = 2, d_ij <= 0 off the diagonal,
 * d_ij = 0 iff d_ji = 0, and 2 | d_ij whenever i is odd. Each edge i-j
 * carries an orientation; t is the optional scalar matrix of the
 * double-crossing relation (default all 1). */
struct CartanData {
    int size = 0;
    std::vector<std::vector<int>> d;
    std::vector<int> parity;                    // 0/1 per vertex, 1-based access via helpers
    std::vector<std::pair<int, int>> arrows;    // oriented edges i -> j
    std::vector<std::vector<Rat>> t;            // t_{ij}, default 1

    void validate() const;
    bool connected(int i, int j) const { return i != j && d[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] != 0; }
    bool arrow(int i, int j) const;             // true when the edge is oriented i -> j
    int count(int i, int j) const { return -d[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1]; }
    int vertex_parity(int i) const { return parity[static_cast<size_t>(i) - 1]; }
    Rat t_of(int i, int j) const;
    std::string str() const;
};

/* The battery of Cartan data the acceptance suite runs: A_1 x A_1,
 * A_2 all-even, A_2 with one odd vertex and d = (2,-2;-2,2), the single
 * odd loopless vertex, and the both-odd connected datum used by the
 * double-crossing example. */
std::vector<CartanData> cartan_battery();

using Seq = std::vector<int>;  // entries in 1..C.size

std::vector<Seq> all_sequences(const CartanData& C, int n);
Seq swap_at(const Seq& nu, int k);
ParityConfig seq_config(const CartanData& C, const Seq& nu);

/* Polynomial in the sequence-tagged space PolC_nu. */
struct NuPoly {
    Seq nu;
    PolyCliff p;
};

NuPoly nu_zero(const CartanData& C, const Seq& nu);
NuPoly nu_monomial(const CartanData& C, const Seq& nu, const Mono& m, Rat coeff = Rat(1));

/* Transport along the place permutation s_k (relabel y's and c's). */
NuPoly transport(const CartanData& C, int k, const NuPoly& f);

/* Collapsed dotted power (c_pos^p y_pos)^d as an element of cfg:
 * (-1)^{p d(d-1)/2} c_pos^{p d mod 2} y_pos^d. */
PolyCliff dotted_power(const ParityConfig& cfg, int pos, int p, int d);

/* The faithful action: sigma_k is s_k on unconnected or backward pairs,
 * the Clifford Demazure operator on equal labels, and
 * (x_k^{<i,j>} + x_{k+1}^{<j,i>}) s_k with x_pos = c_pos^{|label|} y_pos
 * on forward arrows. */
NuPoly sigma_apply(const CartanData& C, int k, const NuPoly& f);

/* Multiplication operators. */
NuPoly y_apply(const CartanData& C, int k, const NuPoly& f);
NuPoly c_apply(const CartanData& C, int k, const NuPoly& f);

/* Degree of sigma_k on PolC_nu: -1 on equal labels, <nu_k,nu_{k+1}> on
 * forward arrows, 0 otherwise. */
int sigma_degree(const CartanData& C, const Seq& nu, int k);

/* Every local relation of the quiver Hecke Clifford superalgebra under
 * the polynomial action, for all nu in I^n and all inputs of degree <=
 * max_degree: dot sliding, Clifford sliding, double crossings with the
 * derived sign pattern, the braid corrector, gradedness, and the
 * c_k = 0 / c_k^2 = 1 parity cases. */
Report verify_hc_relations(const CartanData& C, int n, int max_degree, ExecMode mode = ExecMode::serial);

/* iota images: x_k -> c_k^{|nu_k|} y_k and
 * tau_k -> gamma^{sc}_{nu_k,nu_{k+1}} (c_k - c_{k+1})^{|nu_k||nu_{k+1}|} sigma_k,
 * with scalar gammas gamma_ii = 1/2 (odd i), 1 when an index is even,
 * and gamma_ij gamma_ji = -1/2 for distinct odd; defaults gamma_ij = 1,
 * gamma_ji = -1/2 for i < j. */
struct IotaConvention {
    Rat gamma_lo = Rat(1);       // gamma_ij for i < j, both odd
    Rat gamma_hi = Rat(-1, 2);   // gamma_ji for i < j, both odd
};

struct NuOp;  // composed operator on the tagged spaces

/* Operator image of a generator under iota, as a composable closure. */
NuOp iota_x(const CartanData& C, int k);
NuOp iota_tau(const CartanData& C, int k, const IotaConvention& conv = {});

/* Relations of the quiver Hecke superalgebra verified on the iota
 * images: dot supercommutation, the two dot-crossing relations, far
 * sliding, double crossing, and the braid corrector. */
Report verify_iota(const CartanData& C, int n, int max_degree, const IotaConvention& conv = {},
                   ExecMode mode = ExecMode::serial);

/* Rank certificate for the spanning set sigma_{w} y^a c^b acting
 * Polc_mu -> Polc_{mu'}: the evaluation matrix on escalating probe sets
 * must reach rank = number of spanning elements per operator degree. */
Report verify_spanning_independence(const CartanData& C, const Seq& nu, int max_alpha_degree);

struct NuOp {
    Seq source, target;
    std::function<NuPoly(const NuPoly&)> fn;
};

NuOp compose(const NuOp& outer, const NuOp& inner);

}  // namespace cliffsym
