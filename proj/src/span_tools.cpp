#include "cliffsym/span_tools.hpp"

#include <deque>
#include <stdexcept>

#include "cliffsym/demazure.hpp"

namespace cliffsym {

void cliff_biclosure(const ParityConfig& cfg, int d, std::vector<PolyCliff> seeds, Echelon& ech,
                     std::vector<PolyCliff>& elems)
{
    std::deque<PolyCliff> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        PolyCliff v = std::move(queue.front());
        queue.pop_front();
        if (v.is_zero()) continue;
        if (!ech.add(coords_in_degree(v, d))) continue;
        for (int i = 1; i <= cfg.n(); ++i) {
            if (!cfg.is_active(i)) continue;
            queue.push_back(PolyCliff::c(cfg, i) * v);
            queue.push_back(v * PolyCliff::c(cfg, i));
        }
        elems.push_back(std::move(v));
    }
}

DegreeSpans subalgebra_spans(const ParityConfig& cfg, const std::vector<PolyCliff>& gens, int max_degree)
{
    for (auto& g : gens) {
        auto dg = g.degree();
        if (!dg || *dg < 1) throw std::invalid_argument("subalgebra_spans: generators must be homogeneous of positive degree");
    }
    DegreeSpans out;
    out.elems.resize(static_cast<size_t>(max_degree) + 1);
    out.dims.resize(static_cast<size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        Echelon ech(degree_basis(cfg, d).size());
        auto& elems = out.elems[static_cast<size_t>(d)];
        if (d == 0) {
            cliff_biclosure(cfg, 0, {PolyCliff::one(cfg)}, ech, elems);
        } else {
            for (auto& g : gens) {
                int e = *g.degree();
                if (e > d) continue;
                for (auto& v : out.elems[static_cast<size_t>(d - e)]) {
                    PolyCliff vg = v * g;
                    if (vg.is_zero()) continue;
                    // close on the right by Clifford generators
                    std::deque<PolyCliff> queue{vg};
                    while (!queue.empty()) {
                        PolyCliff u = std::move(queue.front());
                        queue.pop_front();
                        if (u.is_zero()) continue;
                        if (!ech.add(coords_in_degree(u, d))) continue;
                        for (int i = 1; i <= cfg.n(); ++i)
                            if (cfg.is_active(i)) queue.push_back(u * PolyCliff::c(cfg, i));
                        elems.push_back(std::move(u));
                    }
                }
            }
        }
        out.dims[static_cast<size_t>(d)] = ech.rank();
        out.ech.push_back(std::move(ech));
    }
    return out;
}

DegreeSpans ideal_spans(const ParityConfig& cfg, const std::vector<PolyCliff>& algebra_gens,
                        const std::vector<PolyCliff>& ideal_gens, int max_degree)
{
    DegreeSpans out;
    out.elems.resize(static_cast<size_t>(max_degree) + 1);
    out.dims.resize(static_cast<size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        Echelon ech(degree_basis(cfg, d).size());
        auto& elems = out.elems[static_cast<size_t>(d)];
        std::vector<PolyCliff> seeds;
        for (auto& h : ideal_gens) {
            auto dh = h.degree();
            if (!dh) throw std::invalid_argument("ideal_spans: inhomogeneous ideal generator");
            if (*dh == d) seeds.push_back(h);
        }
        for (auto& g : algebra_gens) {
            int e = *g.degree();
            if (e > d) continue;
            for (auto& u : out.elems[static_cast<size_t>(d - e)]) {
                seeds.push_back(g * u);
                seeds.push_back(u * g);
            }
        }
        cliff_biclosure(cfg, d, std::move(seeds), ech, elems);
        out.dims[static_cast<size_t>(d)] = ech.rank();
        out.ech.push_back(std::move(ech));
    }
    return out;
}

std::vector<int> kernel_intersection_dims(const ParityConfig& cfg, const std::vector<int>& indices,
                                          int max_degree)
{
    std::vector<int> dims(static_cast<size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        auto basis = degree_basis(cfg, d);
        if (d == 0 || indices.empty()) {
            // all d_i kill degree 0
            dims[static_cast<size_t>(d)] = static_cast<int>(basis.size());
            continue;
        }
        size_t w = degree_basis(cfg, d - 1).size() * indices.size();
        std::vector<std::vector<Rat>> stacked;
        stacked.reserve(basis.size());
        for (auto& m : basis) {
            std::vector<Rat> row;
            row.reserve(w);
            PolyCliff f = PolyCliff::monomial(cfg, m);
            for (int i : indices) {
                auto part = coords_in_degree(demazure_apply(i, f), d - 1);
                row.insert(row.end(), part.begin(), part.end());
            }
            stacked.push_back(std::move(row));
        }
        dims[static_cast<size_t>(d)] = static_cast<int>(basis.size()) - rank_of(stacked, w);
    }
    return dims;
}

}  // namespace cliffsym
