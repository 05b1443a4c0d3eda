#include "cliffsym/complete.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffsym {

CliffElem kappa(const ParityConfig& cfg, int k, int l, int shift)
{
    if (!(1 <= k && k <= l)) throw std::invalid_argument("kappa: need 1 <= k <= l");
    auto G = [&](int i, int dir) { return gamma(cfg, i + shift, dir); };
    if (k == l) return G(l, 1);
    CliffElem out = CliffElem::one(cfg);
    for (int j = k + 1; j <= l - 1; ++j) out = out * G(j, -1) * G(j, 1);
    return out * G(l, -1);
}

CliffElem kappa_tilde(const ParityConfig& cfg, int k, int l, int shift)
{
    return kappa(cfg, k, l, shift) * kappa(cfg, l, l, shift);
}

MMatrix m_matrix(const ParityConfig& cfg, int n, int shift)
{
    if (shift + n > cfg.n()) throw std::invalid_argument("m_matrix: window exceeds config");
    MMatrix M;
    M.n = n;
    M.shift = shift;
    M.a.assign(static_cast<size_t>(n), std::vector<PolyCliff>(static_cast<size_t>(n), PolyCliff::zero(cfg)));
    for (int l = 1; l <= n; ++l) {
        PolyCliff e = elem_poly(cfg, ElemIndex{shift, shift + n, l});
        M.a[static_cast<size_t>(l) - 1][0] = (l - 1) % 2 ? -e : e;
        if (l < n)
            M.a[static_cast<size_t>(l) - 1][static_cast<size_t>(l)] =
                PolyCliff::from_cliff(kappa_tilde(cfg, 1, l + 1, shift));
    }
    return M;
}

MMatrix m_identity(const ParityConfig& cfg, int n, int shift)
{
    MMatrix M;
    M.n = n;
    M.shift = shift;
    M.a.assign(static_cast<size_t>(n), std::vector<PolyCliff>(static_cast<size_t>(n), PolyCliff::zero(cfg)));
    for (int i = 0; i < n; ++i) M.a[static_cast<size_t>(i)][static_cast<size_t>(i)] = PolyCliff::one(cfg);
    return M;
}

MMatrix m_mul(const MMatrix& x, const MMatrix& y)
{
    if (x.n != y.n) throw std::invalid_argument("m_mul: size mismatch");
    MMatrix M;
    M.n = x.n;
    M.shift = x.shift;
    const ParityConfig& cfg = x.a[0][0].cfg();
    M.a.assign(static_cast<size_t>(x.n), std::vector<PolyCliff>(static_cast<size_t>(x.n), PolyCliff::zero(cfg)));
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            PolyCliff acc(cfg);
            for (int k = 0; k < x.n; ++k)
                acc += x.a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                       y.a[static_cast<size_t>(k)][static_cast<size_t>(j)];
            M.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(acc);
        }
    return M;
}

MPowerTable::MPowerTable(ParityConfig cfg, int n, int shift) : cfg_(std::move(cfg)), n_(n), shift_(shift)
{
    pows_.push_back(m_identity(cfg_, n, shift));
}

const MMatrix& MPowerTable::power(int m)
{
    if (m < 0) throw std::invalid_argument("MPowerTable: negative power");
    while (static_cast<int>(pows_.size()) <= m) {
        if (pows_.size() == 1) pows_.push_back(m_matrix(cfg_, n_, shift_));
        else
            pows_.push_back(m_mul(pows_.back(), pows_[1]));
    }
    return pows_[static_cast<size_t>(m)];
}

PolyCliff complete_poly(const ParityConfig& cfg, int n, int m, int shift)
{
    MPowerTable t(cfg, n, shift);
    return t.power(m).a[0][0];
}

static PolyCliff kt_product(const ParityConfig& cfg, int l, int shift)
{
    // kappa~_{1,2} ... kappa~_{1,l}: empty (= 1) for l <= 1
    PolyCliff p = PolyCliff::one(cfg);
    for (int j = 2; j <= l; ++j) p = p * PolyCliff::from_cliff(kappa_tilde(cfg, 1, j, shift));
    return p;
}

Report mpower_top_row_check(const ParityConfig& cfg, int n, int max_m)
{
    Report rep;
    MPowerTable t(cfg, n);
    for (int m = 0; m <= max_m; ++m) {
        const MMatrix& P = t.power(m);
        bool ok = true;
        std::string detail;
        for (int j = 1; j <= n; ++j) {
            PolyCliff expected(cfg);
            if (m - j + 1 >= 0) expected = complete_poly(cfg, n, m - j + 1) * kt_product(cfg, j, 0);
            if (!(P.a[0][static_cast<size_t>(j) - 1] == expected)) {
                ok = false;
                detail = "column " + std::to_string(j);
                break;
            }
        }
        rep.add("m-top-row[" + cfg.str() + "]/n=" + std::to_string(n) + "/m=" + std::to_string(m), ok, detail);
    }
    return rep;
}

Report verify_vanishing(const ParityConfig& cfg, int n, int max_m, int shift)
{
    Report rep;
    MPowerTable t(cfg, n, shift);
    for (int m = 0; m <= max_m; ++m) {
        PolyCliff left(cfg), right(cfg);
        for (int l = 0; l <= std::min(m, n); ++l) {
            PolyCliff h = t.power(m - l).a[0][0];
            PolyCliff e = l == 0 ? PolyCliff::one(cfg) : elem_poly(cfg, ElemIndex{shift, shift + n, l});
            PolyCliff kt = kt_product(cfg, l, shift);
            PolyCliff term_l = h * kt * e;
            PolyCliff term_r = kt * e * h;
            if (l % 2) {
                term_l = -term_l;
                term_r = -term_r;
            }
            left += term_l;
            right += term_r;
        }
        PolyCliff expected = m == 0 ? PolyCliff::one(cfg) : PolyCliff::zero(cfg);
        std::ostringstream name;
        name << "vanishing[" << cfg.str() << "]/n=" << n << (shift ? "/shift=" + std::to_string(shift) : "")
             << "/m=" << m;
        bool ok = left == expected && right == expected;
        rep.add(name.str(), ok,
                ok ? "" : "left = " + left.str() + " right = " + right.str());
    }
    return rep;
}

Report verify_kappa(const ParityConfig& cfg, int n)
{
    Report rep;
    std::string tag = "kappa[" + cfg.str() + "]/";
    for (int l = 1; l <= n; ++l) {
        bool ok = kappa(cfg, l, l) == gamma(cfg, l, 1);
        rep.add(tag + "k(l,l)=g(l,l+1)/l=" + std::to_string(l), ok);
        if (l >= 2) {
            ok = kappa(cfg, l - 1, l) == gamma(cfg, l, -1);
            rep.add(tag + "k(l-1,l)=g(l,l-1)/l=" + std::to_string(l), ok);
        }
    }
    for (int k = 1; k <= n; ++k)
        for (int l = k; l <= n; ++l) {
            auto kv = kappa(cfg, k, l);
            auto inv = cliff_inverse(kv);
            rep.add(tag + "unit/k=" + std::to_string(k) + "/l=" + std::to_string(l), inv.has_value());
            auto ktv = kappa_tilde(cfg, k, l);
            rep.add(tag + "unit-tilde/k=" + std::to_string(k) + "/l=" + std::to_string(l),
                    cliff_inverse(ktv).has_value());
            for (int m = k + 1; m <= l - 1; ++m) {
                bool split = kappa(cfg, k, l) == kappa_tilde(cfg, k, m) * kappa(cfg, m, l);
                rep.add(tag + "split/k=" + std::to_string(k) + "/m=" + std::to_string(m) +
                            "/l=" + std::to_string(l),
                        split);
            }
        }
    rep.normalize();
    return rep;
}

Report verify_h_symmetric(const ParityConfig& cfg, int n, int max_m)
{
    Report rep;
    MPowerTable t(cfg, n);
    for (int m = 0; m <= max_m; ++m) {
        PolyCliff h = t.power(m).a[0][0];
        for (int j = 1; j <= n - 1; ++j) {
            PolyCliff img = demazure_apply(j, h);
            std::ostringstream name;
            name << "h-symmetric[" << cfg.str() << "]/n=" << n << "/m=" << m << "/d" << j;
            rep.add(name.str(), img.is_zero(), img.is_zero() ? "" : img.str());
        }
    }
    return rep;
}

}  // namespace cliffsym
