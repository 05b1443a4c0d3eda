#pragma once

#include <map>
#include <vector>

#include "cliffsym/dsymmetric.hpp"

namespace cliffsym {

/* kappa_{k,l} (1 <= k <= l): the ordered gamma product
 * gamma_{k+1,k} gamma_{k+1,k+2} ... gamma_{l-1,l-2} gamma_{l-1,l} gamma_{l,l-1},
 * with kappa_{l,l} = gamma_{l,l+1}. `shift` translates every index, which
 * yields the window versions used for partial flags. */
CliffElem kappa(const ParityConfig& cfg, int k, int l, int shift = 0);
/* kappa~_{k,l} = kappa_{k,l} kappa_{l,l}. */
CliffElem kappa_tilde(const ParityConfig& cfg, int k, int l, int shift = 0);

/* The n x n matrix M with first column ((-1)^{l-1} e^{(n)}_l)_l and
 * superdiagonal kappa~_{1,2}, ..., kappa~_{1,n}; entries live in the
 * window (shift, shift+n) of cfg. */
struct MMatrix {
    int n = 0;
    int shift = 0;
    std::vector<std::vector<PolyCliff>> a;  // row-major
};

MMatrix m_matrix(const ParityConfig& cfg, int n, int shift = 0);
MMatrix m_identity(const ParityConfig& cfg, int n, int shift = 0);
MMatrix m_mul(const MMatrix& x, const MMatrix& y);

/* Memoized powers of M per (cfg, window). */
class MPowerTable {
  public:
    MPowerTable(ParityConfig cfg, int n, int shift = 0);
    const MMatrix& power(int m);

  private:
    ParityConfig cfg_;
    int n_, shift_;
    std::vector<MMatrix> pows_;
};

/* h^{(n)}_m: top left entry of M^m (window version for shift > 0). */
PolyCliff complete_poly(const ParityConfig& cfg, int n, int m, int shift = 0);

/* Top row of M^m compared against the pattern
 * (h_m, h_{m-1} k~_{1,2}, h_{m-2} k~_{1,2}k~_{1,3}, ..., 0, ...). */
Report mpower_top_row_check(const ParityConfig& cfg, int n, int max_m);

/* Both Kronecker-delta orderings, exact, for 0 <= m <= max_m:
 *  sum_l (-1)^l h_{m-l} k~_{1,2}...k~_{1,l} e_l
 *  = sum_l (-1)^l k~_{1,2}...k~_{1,l} e_l h_{m-l} = delta_{m,0}. */
Report verify_vanishing(const ParityConfig& cfg, int n, int max_m, int shift = 0);

/* kappa splitting kappa_{k,l} = kappa~_{k,m} kappa_{m,l}, unit checks,
 * and the boundary identities kappa_{l-1,l} = gamma_{l,l-1},
 * kappa_{l,l} = gamma_{l,l+1}. */
Report verify_kappa(const ParityConfig& cfg, int n);

/* d_j h^{(n)}_m = 0 for all j <= n-1. */
Report verify_h_symmetric(const ParityConfig& cfg, int n, int max_m);

}  // namespace cliffsym
