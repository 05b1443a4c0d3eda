#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cliffsym/parallel.hpp"
#include "cliffsym/polyclifford.hpp"
#include "cliffsym/report.hpp"

namespace cliffsym {

/* Clifford Demazure operator: d_i(y_i) = -1 - c_i c_{i+1},
 * d_i(y_{i+1}) = 1 - c_i c_{i+1}, d_i(y_j) = 0 otherwise, d_i(c_j) = 0,
 * extended as an s_i-derivation d_i(fg) = d_i(f) g + s_i(f) d_i(g) along
 * the canonical factorization c^w y_1^{a_1} ... y_n^{a_n}. */
PolyCliff demazure_apply(int i, const PolyCliff& f);

/* d along a word of simple reflections; the rightmost letter acts first,
 * so demazure_along({1,2}, f) = d_1(d_2(f)). */
PolyCliff demazure_along(const ReducedWord& word, const PolyCliff& f);
/* d_w via the canonical reduced word of w. */
PolyCliff demazure_perm(const Perm& w, const PolyCliff& f);

/* Contraction of the complex (PolC, d_i): on a homogeneous f of degree k,
 * h_k(f) = (1/2)(-1 - c_i c_{i+1}) y_i f   for even k,
 * h_k(f) = (1/2)(+1 - c_i c_{i+1}) y_{i+1} f for odd k. */
PolyCliff homotopy_apply(int i, const PolyCliff& f);

/* Scalar lambda with (h d + d h) = lambda * id: 1 when i, i+1 are both
 * odd (c_i c_{i+1} squares to -1), else 1/2. */
Rat homotopy_constant(const ParityConfig& cfg, int i);

/* Formal word in the generators, acting on PolC; the word is the algebra
 * product read left to right, so the rightmost atom applies first. */
struct OpAtom {
    enum class Kind { y, c, d, s, scalar };
    Kind kind;
    int idx = 0;
    Rat coeff = Rat(1);

    static OpAtom y(int i) { return {Kind::y, i}; }
    static OpAtom c(int i) { return {Kind::c, i}; }
    static OpAtom d(int i) { return {Kind::d, i}; }
    static OpAtom s(int i) { return {Kind::s, i}; }
    static OpAtom scalar(Rat r) { return {Kind::scalar, 0, std::move(r)}; }
};
using OpWord = std::vector<OpAtom>;

PolyCliff op_apply(const OpWord& word, const PolyCliff& f);

/* Apply d_i by the derivation rule along an arbitrary factorization of a
 * monomial into single-variable and Clifford atoms; used to certify that
 * the result does not depend on the factorization order. */
struct FactorAtom {
    bool is_y = true;
    int idx = 1;
};
PolyCliff demazure_along_factorization(int i, const std::vector<FactorAtom>& factors,
                                       const ParityConfig& cfg);

/* Every defining relation of the NilHecke Clifford superalgebra checked
 * as an operator identity on all monomials of degree <= max_degree.
 * Quotient configs assert c_i^2 = 1 for active indices and c_i = 0 for
 * the killed ones. */
Report verify_nhc_relations(const ParityConfig& cfg, int max_degree,
                            ExecMode mode = ExecMode::serial);

/* Per-degree rank(ker d_i) = rank(im d_i) plus the exact homotopy
 * identity with the constant from homotopy_constant. */
Report verify_ker_eq_im(int i, const ParityConfig& cfg, int max_degree);

}  // namespace cliffsym
