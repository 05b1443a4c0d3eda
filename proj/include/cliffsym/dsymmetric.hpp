#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliffsym/demazure.hpp"
#include "cliffsym/polyclifford.hpp"
#include "cliffsym/report.hpp"

namespace cliffsym {

/* Symbolic factor in an elementary d-symmetric polynomial: either a
 * gamma_{i,j} with |i-j| = 1 or a variable y_i. Keeping the factors
 * symbolic preserves the displayed factor order, which matters because
 * gammas may anticommute with the y's. */
struct SymFactor {
    bool is_gamma = true;
    int i = 0;  // gamma_{i,j} or y_i
    int j = 0;  // gamma second index

    static SymFactor g(int i, int j) { return {true, i, j}; }
    static SymFactor y(int i) { return {false, i, 0}; }
};
using SymTerm = std::vector<SymFactor>;
using SymElem = std::vector<SymTerm>;  // sum of terms

/* e^{(n)}_m as a sum of symbolic factor strings, window coordinates
 * 1..n. The recursion (base gamma_{1,2} y_1, top case appending
 * gamma_{n,n+1} y_n, middle case appending the gamma ladder
 * gamma_{m+1,m} gamma_{m+1,m+2} ... gamma_{n-1,n-2} gamma_{n-1,n}
 * gamma_{n,n-1} y_n) is the unique reading consistent with the explicit
 * n <= 4 table and with d-symmetry. */
SymElem elem_symbolic(int n, int m);
SymElem shift_symbolic(const SymElem& e, int shift);
std::string sym_term_str(const SymTerm& t);

PolyCliff eval_symbolic(const ParityConfig& cfg, const SymElem& e, int shift = 0);

/* Window of an elementary d-symmetric polynomial: variables
 * y_{k+1}..y_n, degree m; requires 0 <= k < n <= cfg.n and 1 <= m <= n-k. */
struct ElemIndex {
    int k = 0;
    int n = 1;
    int m = 1;
};

/* e^{(k,n)}_m evaluated in cfg (index shift k applied to the window
 * recursion; all gammas read off the ambient parities). */
PolyCliff elem_poly(const ParityConfig& cfg, const ElemIndex& idx);
PolyCliff elem_poly(const ParityConfig& cfg, int n, int m);  // window (0,n)

/* Memoized per-config table of elementary polynomials. */
class ElemTable {
  public:
    explicit ElemTable(ParityConfig cfg) : cfg_(std::move(cfg)) {}
    const ParityConfig& cfg() const { return cfg_; }
    const PolyCliff& get(int k, int n, int m);
    const PolyCliff& get(int n, int m) { return get(0, n, m); }

  private:
    ParityConfig cfg_;
    std::map<std::tuple<int, int, int>, PolyCliff> memo_;
};

/* d_j e^{(k,n)}_m = 0 for every j interior to the window. */
Report verify_symmetric(const ParityConfig& cfg, const ElemIndex& idx);
/* All windows with n <= n_max. */
Report verify_symmetric_all(const ParityConfig& cfg, int n_max, ExecMode mode = ExecMode::serial);

/* Brute-force odd elementary symmetric polynomial in the normalization
 * of Ellis-Khovanov-Lauda: sum over k_1 < ... < k_m of
 * (-1)^{(k_1-1)+...+(k_m-1)} x_{k_1}...x_{k_m} with x_i = c_i y_i. */
PolyCliff ekl_elementary(const ParityConfig& cfg, int n, int m);
/* elem_poly == (-1)^{m(m-1)/2} * ekl_elementary for the all-odd config
 * with odd boundary, all m <= n. */
Report odd_specialization_check(int n);

/* Classical brute-force oracles (even specialization). */
PolyCliff classical_elementary(const ParityConfig& cfg, int n, int m);
PolyCliff classical_complete(const ParityConfig& cfg, int n, int m);

struct LambdaCoeffs {
    bool ok = false;      // reconstruction verified
    bool unique = false;  // expansion coefficients uniquely determined
    std::map<int, CliffElem> lam;
};

/* Coefficients lambda^{(0,k,n)}_{m,l} in C_I with
 * e^{(n)}_m = sum_l e^{(0,k)}_l lambda_{m,l} e^{(k,n)}_{m-l},
 * solved exactly over the word basis and verified by reconstruction. */
LambdaCoeffs lambda_coeffs(const ParityConfig& cfg, int k, int n, int m);

/* Flag shape 0 = k_0 <= k_1 <= ... <= k_l = n. */
using FlagShape = std::vector<int>;
void validate_shape(const FlagShape& shape, int n);

struct FlagGenerator {
    ElemIndex idx;
    PolyCliff poly;
};
std::vector<FlagGenerator> flag_algebra_generators(const ParityConfig& cfg, const FlagShape& shape);

/* Each generator is killed by every d_j with j not a cut index, and the
 * generated subalgebra equals the intersection of those kernels
 * degreewise up to max_degree. */
Report verify_flag_kernel(const ParityConfig& cfg, const FlagShape& shape, int max_degree);

/* Both one-step inclusion formulas as exact identities in PolC:
 *   e^{(k,n)}_m   = gamma_{k+1,k+2} y_{k+1} e^{(k+1,n)}_{m-1}
 *                   + gamma_{k+1,k} gamma_{k+1,k+2} e^{(k+1,n)}_m
 *   e^{(0,k+1)}_m = e^{(0,k)}_m + e^{(0,k)}_{m-1}
 *                   (gamma_{m+1,m} ... gamma_{k,k+1}) gamma_{k+1,k} y_{k+1} */
Report one_step_inclusions(const ParityConfig& cfg, int k, int n);

/* lambda endpoint closed forms of the paper's example:
 * lambda^{(0,1,n)}_{m,0} = gamma_{2,1} gamma_{2,3}, lambda^{(0,1,n)}_{m,1} = 1,
 * lambda^{(0,n-1,n)}_{m,m} = 1; plus the all-even case lambda = 1 for all l. */
Report verify_lambda_endpoints(const ParityConfig& cfg, int n);

}  // namespace cliffsym
