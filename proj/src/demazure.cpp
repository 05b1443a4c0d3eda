#include "cliffsym/demazure.hpp"

#include <sstream>
#include <stdexcept>

#include "cliffsym/linalg.hpp"

namespace cliffsym {

static void require_index(int i, const ParityConfig& cfg)
{
    if (i < 1 || i >= cfg.n()) throw std::out_of_range("demazure: index out of range");
}

/* -1 - c_i c_{i+1} */
static PolyCliff alpha_minus(const ParityConfig& cfg, int i)
{
    Mono cc;
    cc.w = (1u << (i - 1)) | (1u << i);
    return PolyCliff::scalar(cfg, Rat(-1)) - PolyCliff::monomial(cfg, cc);
}

/* +1 - c_i c_{i+1} */
static PolyCliff alpha_plus(const ParityConfig& cfg, int i)
{
    Mono cc;
    cc.w = (1u << (i - 1)) | (1u << i);
    return PolyCliff::scalar(cfg, Rat(1)) - PolyCliff::monomial(cfg, cc);
}

/* d_i(y_i^a y_{i+1}^b) by the derivation rule. */
static PolyCliff dy_power(const ParityConfig& cfg, int i, int a, int b)
{
    if (a == 0 && b == 0) return PolyCliff::zero(cfg);
    if (a > 0) {
        Mono rest;
        rest.e[static_cast<size_t>(i) - 1] = static_cast<uint8_t>(a - 1);
        rest.e[static_cast<size_t>(i)] = static_cast<uint8_t>(b);
        return alpha_minus(cfg, i) * PolyCliff::monomial(cfg, rest) +
               PolyCliff::y(cfg, i + 1) * dy_power(cfg, i, a - 1, b);
    }
    Mono rest;
    rest.e[static_cast<size_t>(i)] = static_cast<uint8_t>(b - 1);
    return alpha_plus(cfg, i) * PolyCliff::monomial(cfg, rest) +
           PolyCliff::y(cfg, i) * dy_power(cfg, i, 0, b - 1);
}

PolyCliff demazure_apply(int i, const PolyCliff& f)
{
    const ParityConfig& cfg = f.cfg();
    require_index(i, cfg);
    Perm si = Perm::transposition(cfg.n(), i);
    PolyCliff out(cfg);
    for (auto& [m, r] : f.terms()) {
        int a = m.e[static_cast<size_t>(i) - 1];
        int b = m.e[static_cast<size_t>(i)];
        if (a == 0 && b == 0) continue;
        Mono rest = m;
        rest.w = 0;
        rest.e[static_cast<size_t>(i) - 1] = 0;
        rest.e[static_cast<size_t>(i)] = 0;
        // d_i(c^w y^e) = s_i(c^w) * d_i(y_i^a y_{i+1}^b) * (other y's)
        CliffElem cw = CliffElem::word(cfg, m.w, r).relabel(si);
        out += PolyCliff::from_cliff(cw) * dy_power(cfg, i, a, b) * PolyCliff::monomial(cfg, rest);
    }
    return out;
}

PolyCliff demazure_along(const ReducedWord& word, const PolyCliff& f)
{
    PolyCliff g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure_apply(*it, g);
    return g;
}

PolyCliff demazure_perm(const Perm& w, const PolyCliff& f)
{
    return demazure_along(reduced_word(w), f);
}

PolyCliff homotopy_apply(int i, const PolyCliff& f)
{
    const ParityConfig& cfg = f.cfg();
    require_index(i, cfg);
    auto d = f.degree();
    if (!d && !f.is_zero()) throw std::invalid_argument("homotopy_apply: inhomogeneous input");
    int k = f.is_zero() ? 0 : *d;
    PolyCliff factor = (k % 2 == 0) ? alpha_minus(cfg, i) * PolyCliff::y(cfg, i)
                                    : alpha_plus(cfg, i) * PolyCliff::y(cfg, i + 1);
    return factor.scaled(half()) * f;
}

Rat homotopy_constant(const ParityConfig& cfg, int i)
{
    bool both_odd = cfg.parity(i) == Parity::odd && cfg.parity(i + 1) == Parity::odd &&
                    cfg.is_active(i) && cfg.is_active(i + 1);
    if (cfg.mode() == CliffMode::full) both_odd = true;
    return both_odd ? Rat(1) : half();
}

PolyCliff op_apply(const OpWord& word, const PolyCliff& f)
{
    PolyCliff g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
            case OpAtom::Kind::y: g = PolyCliff::y(g.cfg(), it->idx) * g; break;
            case OpAtom::Kind::c: g = PolyCliff::c(g.cfg(), it->idx) * g; break;
            case OpAtom::Kind::d: g = demazure_apply(it->idx, g); break;
            case OpAtom::Kind::s: g = sn_act(Perm::transposition(g.cfg().n(), it->idx), g); break;
            case OpAtom::Kind::scalar: g = g.scaled(it->coeff); break;
        }
    }
    return g;
}

PolyCliff demazure_along_factorization(int i, const std::vector<FactorAtom>& factors,
                                       const ParityConfig& cfg)
{
    require_index(i, cfg);
    if (factors.empty()) return PolyCliff::zero(cfg);
    // d(first * rest) = d(first) * rest + s_i(first) * d(rest)
    FactorAtom head = factors.front();
    std::vector<FactorAtom> rest(factors.begin() + 1, factors.end());
    PolyCliff head_poly =
        head.is_y ? PolyCliff::y(cfg, head.idx) : PolyCliff::c(cfg, head.idx);
    PolyCliff rest_poly = PolyCliff::one(cfg);
    for (auto& a : rest) rest_poly = rest_poly * (a.is_y ? PolyCliff::y(cfg, a.idx) : PolyCliff::c(cfg, a.idx));
    PolyCliff d_head(cfg);
    if (head.is_y) {
        if (head.idx == i) d_head = alpha_minus(cfg, i);
        else if (head.idx == i + 1)
            d_head = alpha_plus(cfg, i);
    }
    PolyCliff out = d_head * rest_poly;
    if (!rest.empty())
        out += sn_act(Perm::transposition(cfg.n(), i), head_poly) * demazure_along_factorization(i, rest, cfg);
    return out;
}

namespace {

struct RelInstance {
    std::string name;
    std::function<PolyCliff(const PolyCliff&)> lhs_minus_rhs;
};

std::vector<RelInstance> nhc_relation_instances(const ParityConfig& cfg)
{
    int n = cfg.n();
    std::vector<RelInstance> rels;
    auto Y = [&](int i, PolyCliff f) { return PolyCliff::y(f.cfg(), i) * f; };
    auto C = [&](int i, PolyCliff f) { return PolyCliff::c(f.cfg(), i) * f; };
    auto D = [&](int i, PolyCliff f) { return demazure_apply(i, f); };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            rels.push_back({"y" + std::to_string(i) + ".y" + std::to_string(j) + "-commute",
                            [=](const PolyCliff& f) { return Y(i, Y(j, f)) - Y(j, Y(i, f)); }});
            rels.push_back({"c" + std::to_string(i) + ".c" + std::to_string(j) + "-anticommute",
                            [=](const PolyCliff& f) { return C(i, C(j, f)) + C(j, C(i, f)); }});
        }
    for (int i = 1; i <= n; ++i) {
        if (cfg.is_active(i))
            rels.push_back({"c" + std::to_string(i) + "-squares-to-1",
                            [=](const PolyCliff& f) { return C(i, C(i, f)) - f; }});
        else
            rels.push_back({"c" + std::to_string(i) + "-killed",
                            [=](const PolyCliff& f) { return C(i, f); }});
        for (int j = 1; j <= n; ++j) {
            int sign = i == j ? -1 : 1;
            rels.push_back({"y" + std::to_string(i) + ".c" + std::to_string(j) + "-comm",
                            [=](const PolyCliff& f) {
                                return Y(i, C(j, f)) - C(j, Y(i, f)).scaled(Rat(sign));
                            }});
        }
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int sj = j == i ? i + 1 : j == i + 1 ? i : j;
            rels.push_back({"d" + std::to_string(i) + ".y" + std::to_string(j) + "-twist",
                            [=](const PolyCliff& f) {
                                PolyCliff lhs = D(i, Y(j, f)) - Y(sj, D(i, f));
                                PolyCliff rhs(f.cfg());
                                if (j == i) rhs = alpha_minus(f.cfg(), i) * f;
                                else if (j == i + 1)
                                    rhs = alpha_plus(f.cfg(), i) * f;
                                return lhs - rhs;
                            }});
            rels.push_back({"d" + std::to_string(i) + ".c" + std::to_string(j) + "-slide",
                            [=](const PolyCliff& f) { return D(i, C(j, f)) - C(sj, D(i, f)); }});
        }
        rels.push_back({"d" + std::to_string(i) + "-squares-to-0",
                        [=](const PolyCliff& f) { return D(i, D(i, f)); }});
        rels.push_back({"s" + std::to_string(i) + ".d" + std::to_string(i) + "-antitwist",
                        [=](const PolyCliff& f) {
                            Perm si = Perm::transposition(f.cfg().n(), i);
                            return sn_act(si, D(i, f)) + D(i, sn_act(si, f));
                        }});
        for (int j = i + 2; j < n; ++j)
            rels.push_back({"d" + std::to_string(i) + ".d" + std::to_string(j) + "-commute",
                            [=](const PolyCliff& f) { return D(i, D(j, f)) - D(j, D(i, f)); }});
        if (i + 1 < n)
            rels.push_back({"d" + std::to_string(i) + "-braid",
                            [=](const PolyCliff& f) {
                                return D(i, D(i + 1, D(i, f))) - D(i + 1, D(i, D(i + 1, f)));
                            }});
    }
    return rels;
}

}  // namespace

Report verify_nhc_relations(const ParityConfig& cfg, int max_degree, ExecMode mode)
{
    auto rels = nhc_relation_instances(cfg);
    std::vector<PolyCliff> inputs;
    for (int d = 0; d <= max_degree; ++d)
        for (auto& m : degree_basis(cfg, d)) inputs.push_back(PolyCliff::monomial(cfg, m));

    std::vector<CheckResult> results(rels.size());
    parallel_for(mode, static_cast<std::ptrdiff_t>(rels.size()), [&](std::ptrdiff_t t) {
        const auto& rel = rels[static_cast<size_t>(t)];
        CheckResult res{"nhc[" + cfg.str() + "]/" + rel.name, true, ""};
        for (auto& f : inputs) {
            PolyCliff diff = rel.lhs_minus_rhs(f);
            if (!diff.is_zero()) {
                res.pass = false;
                res.detail = "fails on " + f.str() + " with residue " + diff.str();
                break;
            }
        }
        results[static_cast<size_t>(t)] = std::move(res);
    });

    Report rep;
    rep.checks = std::move(results);
    rep.normalize();
    return rep;
}

Report verify_ker_eq_im(int i, const ParityConfig& cfg, int max_degree)
{
    Report rep;
    require_index(i, cfg);

    // matrices of d_i per degree, as column collections
    std::vector<int> kernel_rank(static_cast<size_t>(max_degree) + 2, 0);
    std::vector<int> image_rank(static_cast<size_t>(max_degree) + 2, 0);
    for (int d = 0; d <= max_degree + 1; ++d) {
        auto basis = degree_basis(cfg, d);
        std::vector<std::vector<Rat>> cols;
        size_t width = d == 0 ? 1 : degree_basis(cfg, d - 1).size();
        for (auto& m : basis) {
            PolyCliff img = demazure_apply(i, PolyCliff::monomial(cfg, m));
            cols.push_back(d == 0 ? std::vector<Rat>{Rat(0)} : coords_in_degree(img, d - 1));
        }
        int r = rank_of(cols, width);
        image_rank[static_cast<size_t>(d)] = r;
        kernel_rank[static_cast<size_t>(d)] = static_cast<int>(basis.size()) - r;
    }
    for (int d = 0; d <= max_degree; ++d) {
        bool ok = kernel_rank[static_cast<size_t>(d)] == image_rank[static_cast<size_t>(d) + 1];
        std::ostringstream name;
        name << "ker-eq-im[" << cfg.str() << "]/d" << i << "/degree=" << d;
        std::ostringstream detail;
        if (!ok)
            detail << "dim ker = " << kernel_rank[static_cast<size_t>(d)]
                   << ", dim im = " << image_rank[static_cast<size_t>(d) + 1];
        rep.add(name.str(), ok, detail.str());
    }

    // homotopy identity h_{k-1} d + d h_k = lambda id, exact per basis element
    Rat lambda = homotopy_constant(cfg, i);
    bool hok = true;
    std::string hdetail;
    for (int d = 0; d <= max_degree && hok; ++d) {
        for (auto& m : degree_basis(cfg, d)) {
            PolyCliff f = PolyCliff::monomial(cfg, m);
            PolyCliff lhs = homotopy_apply(i, demazure_apply(i, f)) + demazure_apply(i, homotopy_apply(i, f));
            if (!(lhs == f.scaled(lambda))) {
                hok = false;
                hdetail = "fails on " + f.str();
                break;
            }
        }
    }
    rep.add("ker-eq-im[" + cfg.str() + "]/d" + std::to_string(i) + "/homotopy(lambda=" + lambda.str() + ")", hok,
            hdetail);
    rep.normalize();
    return rep;
}

}  // namespace cliffsym
