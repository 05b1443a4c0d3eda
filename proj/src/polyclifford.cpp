#include "cliffsym/polyclifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cliffsym {

PolyCliff PolyCliff::scalar(const ParityConfig& cfg, Rat r)
{
    PolyCliff f(cfg);
    f.add_term(Mono{}, std::move(r));
    return f;
}

PolyCliff PolyCliff::y(const ParityConfig& cfg, int i)
{
    if (i < 1 || i > cfg.n()) throw std::invalid_argument("PolyCliff::y: index out of range");
    Mono m;
    m.e[static_cast<size_t>(i) - 1] = 1;
    return monomial(cfg, m);
}

PolyCliff PolyCliff::c(const ParityConfig& cfg, int i)
{
    if (i < 1 || i > cfg.n()) throw std::invalid_argument("PolyCliff::c: index out of range");
    Mono m;
    m.w = 1u << (i - 1);
    return monomial(cfg, m);
}

PolyCliff PolyCliff::monomial(const ParityConfig& cfg, Mono m, Rat coeff)
{
    PolyCliff f(cfg);
    f.add_term(m, std::move(coeff));
    return f;
}

PolyCliff PolyCliff::from_cliff(const CliffElem& a)
{
    PolyCliff f(a.cfg());
    for (auto& [w, r] : a.terms()) {
        Mono m;
        m.w = w;
        f.add_term(m, r);
    }
    return f;
}

void PolyCliff::add_term(const Mono& m, Rat r)
{
    if ((m.w & ~cfg_.active_mask()) != 0) return;
    if (r.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_.emplace(m, std::move(r));
    else {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyCliff PolyCliff::operator-() const
{
    PolyCliff f(cfg_);
    for (auto& [m, r] : terms_) f.terms_.emplace(m, -r);
    return f;
}

PolyCliff& PolyCliff::operator+=(const PolyCliff& o)
{
    if (!(cfg_ == o.cfg_)) throw std::invalid_argument("PolyCliff: parity config mismatch");
    for (auto& [m, r] : o.terms_) add_term(m, r);
    return *this;
}

PolyCliff& PolyCliff::operator-=(const PolyCliff& o) { return *this += -o; }

/* (c^w1 y^e1)(c^w2 y^e2): moving c^w2 left across y^e1 contributes
 * (-1)^{sum of e1 over the indices of w2}; then the words multiply with
 * their sorting sign and the exponents add. */
PolyCliff operator*(const PolyCliff& a, const PolyCliff& b)
{
    if (!(a.cfg_ == b.cfg_)) throw std::invalid_argument("PolyCliff: parity config mismatch");
    PolyCliff out(a.cfg_);
    for (auto& [ma, ra] : a.terms_)
        for (auto& [mb, rb] : b.terms_) {
            int sign = word_mul_sign(ma.w, mb.w);
            CWord wb = mb.w;
            while (wb) {
                int i = std::countr_zero(wb);
                wb &= wb - 1;
                if (ma.e[static_cast<size_t>(i)] % 2) sign = -sign;
            }
            Mono m;
            m.w = word_mul(ma.w, mb.w);
            bool overflow = false;
            for (size_t k = 0; k < kMaxVars; ++k) {
                int s = ma.e[k] + mb.e[k];
                if (s > 255) overflow = true;
                m.e[k] = static_cast<uint8_t>(s);
            }
            if (overflow) throw std::overflow_error("PolyCliff: exponent overflow");
            Rat cf = ra * rb;
            if (sign < 0) cf = -cf;
            out.add_term(m, std::move(cf));
        }
    return out;
}

PolyCliff PolyCliff::scaled(const Rat& r) const
{
    PolyCliff f(cfg_);
    if (r.is_zero()) return f;
    for (auto& [m, c] : terms_) f.terms_.emplace(m, c * r);
    return f;
}

PolyCliff PolyCliff::pow(int e) const
{
    if (e < 0) throw std::invalid_argument("PolyCliff::pow: negative exponent");
    PolyCliff r = one(cfg_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool PolyCliff::is_homogeneous() const
{
    std::optional<int> d;
    for (auto& [m, r] : terms_) {
        if (d && *d != m.degree()) return false;
        d = m.degree();
    }
    return true;
}

std::optional<int> PolyCliff::degree() const
{
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree();
}

int PolyCliff::max_degree() const
{
    int d = 0;
    for (auto& [m, r] : terms_) d = std::max(d, m.degree());
    return d;
}

PolyCliff PolyCliff::component(int d) const
{
    PolyCliff f(cfg_);
    for (auto& [m, r] : terms_)
        if (m.degree() == d) f.terms_.emplace(m, r);
    return f;
}

std::optional<CliffElem> PolyCliff::as_cliff() const
{
    CliffElem a(cfg_);
    for (auto& [m, r] : terms_) {
        if (m.degree() != 0) return std::nullopt;
        a.set_term(m.w, r);
    }
    return a;
}

std::string PolyCliff::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, r] : terms_) {
        std::string rs = r.str();
        if (!first) {
            if (!rs.empty() && rs[0] == '-') {
                os << " - ";
                rs = rs.substr(1);
            } else
                os << " + ";
        }
        std::ostringstream body;
        if (m.w) body << word_str(m.w);
        for (int i = 0; i < cfg_.n(); ++i) {
            int e = m.e[static_cast<size_t>(i)];
            if (!e) continue;
            body << (body.str().empty() ? "" : "*") << "y" << i + 1;
            if (e > 1) body << "^" << e;
        }
        std::string bs = body.str();
        if (bs.empty()) os << rs;
        else if (rs == "1")
            os << bs;
        else if (rs == "-1")
            os << "-" << bs;
        else
            os << rs << "*" << bs;
        first = false;
    }
    return os.str();
}

PolyCliff sn_act(const Perm& w, const PolyCliff& f)
{
    if (w.n() != f.cfg().n()) throw std::invalid_argument("sn_act: size mismatch");
    PolyCliff out(f.cfg());
    for (auto& [m, r] : f.terms()) {
        Mono nm;
        for (int i = 1; i <= f.cfg().n(); ++i)
            nm.e[static_cast<size_t>(w(i)) - 1] = m.e[static_cast<size_t>(i) - 1];
        auto idx = word_indices(m.w);
        std::vector<int> img;
        img.reserve(idx.size());
        for (int i : idx) img.push_back(w(i));
        int inv = 0;
        for (size_t a = 0; a < img.size(); ++a) {
            nm.w |= 1u << (img[a] - 1);
            for (size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) ++inv;
        }
        out.add_term(nm, inv % 2 == 0 ? r : -r);
    }
    return out;
}

static void compositions_rec(int n, int d, int pos, ExpVec& cur, std::vector<ExpVec>& out)
{
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = static_cast<uint8_t>(d);
        out.push_back(cur);
        cur[static_cast<size_t>(pos)] = 0;
        return;
    }
    for (int k = 0; k <= d; ++k) {
        cur[static_cast<size_t>(pos)] = static_cast<uint8_t>(k);
        compositions_rec(n, d - k, pos + 1, cur, out);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

std::vector<Mono> degree_basis(const ParityConfig& cfg, int d)
{
    if (d < 0) throw std::invalid_argument("degree_basis: negative degree");
    if (cfg.n() > kMaxVars) throw std::length_error("degree_basis: too many variables");
    std::vector<CWord> words;
    uint32_t mask = cfg.active_mask();
    for (CWord s = mask;; s = (s - 1) & mask) {
        words.push_back(s);
        if (s == 0) break;
    }
    std::sort(words.begin(), words.end(), word_lex_less);

    std::vector<ExpVec> exps;
    if (cfg.n() == 0) {
        if (d == 0) exps.push_back(ExpVec{});
    } else {
        ExpVec cur{};
        compositions_rec(cfg.n(), d, 0, cur, exps);
        std::sort(exps.begin(), exps.end());
    }

    std::vector<Mono> basis;
    basis.reserve(words.size() * exps.size());
    for (CWord w : words)
        for (auto& e : exps) basis.push_back(Mono{w, e});
    return basis;
}

std::vector<Rat> coords_in_degree(const PolyCliff& f, int d)
{
    auto basis = degree_basis(f.cfg(), d);
    std::map<Mono, size_t, MonoLess> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    std::vector<Rat> v(basis.size(), Rat(0));
    for (auto& [m, r] : f.terms()) {
        if (m.degree() != d) throw std::invalid_argument("coords_in_degree: inhomogeneous input");
        v[pos.at(m)] = r;
    }
    return v;
}

}  // namespace cliffsym
