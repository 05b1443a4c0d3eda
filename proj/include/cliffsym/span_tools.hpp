#pragma once

#include <vector>

#include "cliffsym/linalg.hpp"
#include "cliffsym/polyclifford.hpp"

namespace cliffsym {

/* Degreewise bases of a graded subspace of PolC, kept as reduced
 * representatives together with their echelon forms. */
struct DegreeSpans {
    std::vector<std::vector<PolyCliff>> elems;  // index = degree
    std::vector<int> dims;
    std::vector<Echelon> ech;

    int dim(int d) const { return d < static_cast<int>(dims.size()) ? dims[static_cast<size_t>(d)] : 0; }
};

/* Close a degree-d seed set under left and right multiplication by the
 * active Clifford generators, recording new basis elements. */
void cliff_biclosure(const ParityConfig& cfg, int d, std::vector<PolyCliff> seeds, Echelon& ech,
                     std::vector<PolyCliff>& elems);

/* Degreewise basis of the C_I-subalgebra generated by homogeneous
 * generators of positive degree: A_0 = C_I and
 * A_d = span{ v * g * c^w : v in A_{d - deg g} }. */
DegreeSpans subalgebra_spans(const ParityConfig& cfg, const std::vector<PolyCliff>& gens, int max_degree);

/* Degreewise spans of the two-sided ideal generated by `ideal_gens`
 * inside the subalgebra generated by `algebra_gens`:
 * J_d = C-biclosure( {h : deg h = d} u g*J u J*g ). */
DegreeSpans ideal_spans(const ParityConfig& cfg, const std::vector<PolyCliff>& algebra_gens,
                        const std::vector<PolyCliff>& ideal_gens, int max_degree);

/* dim per degree of the intersection of ker d_i over the given indices. */
std::vector<int> kernel_intersection_dims(const ParityConfig& cfg, const std::vector<int>& indices,
                                          int max_degree);

}  // namespace cliffsym
