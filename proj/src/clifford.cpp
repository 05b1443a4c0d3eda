#include "cliffsym/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cliffsym {

ParityConfig::ParityConfig(int n, uint32_t odd_mask, CliffMode mode, Parity boundary)
    : n_(n), odd_mask_(odd_mask), mode_(mode), boundary_(boundary)
{
    if (n < 0 || n > 20) throw std::invalid_argument("ParityConfig: n out of range");
    if (mode == CliffMode::full) odd_mask_ = n >= 32 ? ~0u : ((1u << n) - 1);
    odd_mask_ &= n >= 32 ? ~0u : ((1u << n) - 1);
}

ParityConfig ParityConfig::all_even(int n) { return ParityConfig(n, 0); }

ParityConfig ParityConfig::all_odd(int n, Parity boundary)
{
    return ParityConfig(n, (1u << n) - 1, CliffMode::quotient, boundary);
}

ParityConfig ParityConfig::full(int n) { return ParityConfig(n, (1u << n) - 1, CliffMode::full); }

ParityConfig ParityConfig::from_parities(const std::vector<int>& bits, CliffMode mode, Parity boundary)
{
    uint32_t mask = 0;
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) mask |= 1u << i;
    return ParityConfig(static_cast<int>(bits.size()), mask, mode, boundary);
}

Parity ParityConfig::parity(int i) const
{
    if (i < 1 || i > n_) return boundary_;
    return (odd_mask_ >> (i - 1)) & 1u ? Parity::odd : Parity::even;
}

bool ParityConfig::is_active(int i) const
{
    if (i < 1 || i > n_) return false;
    if (mode_ == CliffMode::full) return true;
    return parity(i) == Parity::odd;
}

uint32_t ParityConfig::active_mask() const
{
    if (mode_ == CliffMode::full) return n_ >= 32 ? ~0u : ((1u << n_) - 1);
    return odd_mask_;
}

int ParityConfig::active_count() const { return std::popcount(active_mask()); }

ParityConfig ParityConfig::prefix(int m) const
{
    if (m < 0 || m > n_) throw std::invalid_argument("ParityConfig::prefix");
    return ParityConfig(m, odd_mask_ & ((m >= 32 ? ~0u : (1u << m) - 1)), mode_, boundary_);
}

std::string ParityConfig::str() const
{
    std::ostringstream os;
    for (int i = 1; i <= n_; ++i) os << (i > 1 ? "," : "") << (parity(i) == Parity::odd ? "odd" : "even");
    if (mode_ == CliffMode::full) os << " (full)";
    return os.str();
}

CWord word_mul(CWord a, CWord b) { return a ^ b; }

int word_mul_sign(CWord a, CWord b)
{
    // count pairs (x in a, y in b) with x > y
    int crossings = 0;
    while (b) {
        int y = std::countr_zero(b);
        b &= b - 1;
        crossings += std::popcount(a >> (y + 1));
    }
    return crossings % 2 == 0 ? 1 : -1;
}

int word_length(CWord w) { return std::popcount(w); }

std::vector<int> word_indices(CWord w)
{
    std::vector<int> idx;
    while (w) {
        idx.push_back(std::countr_zero(w) + 1);
        w &= w - 1;
    }
    return idx;
}

bool word_lex_less(CWord a, CWord b)
{
    while (a && b) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::string word_str(CWord w)
{
    if (!w) return "1";
    std::ostringstream os;
    for (int i : word_indices(w)) os << "c" << i;
    return os.str();
}

CliffElem CliffElem::scalar(const ParityConfig& cfg, Rat r)
{
    CliffElem e(cfg);
    e.set_term(0, std::move(r));
    return e;
}

CliffElem CliffElem::generator(const ParityConfig& cfg, int i)
{
    if (i < 1 || i > cfg.n()) throw std::invalid_argument("CliffElem::generator: index out of range");
    return word(cfg, 1u << (i - 1));
}

CliffElem CliffElem::word(const ParityConfig& cfg, CWord w, Rat coeff)
{
    CliffElem e(cfg);
    e.set_term(w, std::move(coeff));
    return e;
}

Rat CliffElem::coeff(CWord w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void CliffElem::set_term(CWord w, Rat r)
{
    if ((w & ~cfg_.active_mask()) != 0) return;  // dead generator in the quotient
    if (r.is_zero()) terms_.erase(w);
    else
        terms_[w] = std::move(r);
}

CliffElem CliffElem::operator-() const
{
    CliffElem e(cfg_);
    for (auto& [w, r] : terms_) e.terms_.emplace(w, -r);
    return e;
}

CliffElem& CliffElem::operator+=(const CliffElem& o)
{
    if (!(cfg_ == o.cfg_)) throw std::invalid_argument("CliffElem: parity config mismatch");
    for (auto& [w, r] : o.terms_) {
        auto it = terms_.find(w);
        if (it == terms_.end()) terms_.emplace(w, r);
        else {
            it->second += r;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

CliffElem& CliffElem::operator-=(const CliffElem& o) { return *this += -o; }

CliffElem operator*(const CliffElem& a, const CliffElem& b)
{
    if (!(a.cfg_ == b.cfg_)) throw std::invalid_argument("CliffElem: parity config mismatch");
    CliffElem out(a.cfg_);
    for (auto& [wa, ra] : a.terms_)
        for (auto& [wb, rb] : b.terms_) {
            Rat c = ra * rb;
            if (word_mul_sign(wa, wb) < 0) c = -c;
            CWord w = word_mul(wa, wb);
            auto it = out.terms_.find(w);
            if (it == out.terms_.end()) out.terms_.emplace(w, std::move(c));
            else {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

CliffElem CliffElem::scaled(const Rat& r) const
{
    CliffElem e(cfg_);
    if (r.is_zero()) return e;
    for (auto& [w, c] : terms_) e.terms_.emplace(w, c * r);
    return e;
}

std::optional<int> CliffElem::parity_of() const
{
    std::optional<int> p;
    for (auto& [w, r] : terms_) {
        int q = word_length(w) % 2;
        if (p && *p != q) return std::nullopt;
        p = q;
    }
    return terms_.empty() ? std::optional<int>(0) : p;
}

CliffElem CliffElem::relabel(const Perm& w) const
{
    if (w.n() != cfg_.n()) throw std::invalid_argument("CliffElem::relabel: size mismatch");
    CliffElem out(cfg_);
    for (auto& [cw, r] : terms_) {
        auto idx = word_indices(cw);
        std::vector<int> img;
        img.reserve(idx.size());
        for (int i : idx) img.push_back(w(i));
        // sign of the sort permutation of the relabeled sequence
        int inv = 0;
        CWord nw = 0;
        for (size_t a = 0; a < img.size(); ++a) {
            nw |= 1u << (img[a] - 1);
            for (size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) ++inv;
        }
        Rat c = inv % 2 == 0 ? r : -r;
        auto it = out.terms_.find(nw);
        if (it == out.terms_.end()) out.set_term(nw, c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

std::string CliffElem::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, r] : terms_) {
        std::string rs = r.str();
        if (!first) {
            if (!rs.empty() && rs[0] == '-') {
                os << " - ";
                rs = rs.substr(1);
            } else
                os << " + ";
        }
        if (w == 0) os << rs;
        else if (rs == "1")
            os << word_str(w);
        else if (rs == "-1")
            os << "-" << word_str(w);
        else
            os << rs << "*" << word_str(w);
        first = false;
    }
    return os.str();
}

CliffElem gamma(const ParityConfig& cfg, int i, int dir)
{
    if (dir != 1 && dir != -1) throw std::invalid_argument("gamma: dir must be +-1");
    if (i < 1 || i > cfg.n()) throw std::invalid_argument("gamma: index out of range");
    if (cfg.parity(i) == Parity::odd && cfg.parity(i + dir) == Parity::odd)
        return CliffElem::word(cfg, 1u << (i - 1), Rat(dir));
    return CliffElem::one(cfg);
}

std::optional<CliffElem> cliff_inverse(const CliffElem& a)
{
    if (a.is_zero()) return std::nullopt;
    const ParityConfig& cfg = a.cfg();
    // enumerate the word basis of the (quotient) algebra
    std::vector<CWord> basis;
    uint32_t mask = cfg.active_mask();
    for (CWord s = mask;; s = (s - 1) & mask) {
        basis.push_back(s);
        if (s == 0) break;
    }
    std::sort(basis.begin(), basis.end(), word_lex_less);
    size_t dim = basis.size();
    std::map<CWord, size_t> pos;
    for (size_t i = 0; i < dim; ++i) pos[basis[i]] = i;

    // columns of left multiplication by a: (a * e_j) expressed in the basis
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim + 1, Rat(0)));
    for (size_t j = 0; j < dim; ++j) {
        CliffElem col = a * CliffElem::word(cfg, basis[j]);
        for (auto& [w, r] : col.terms()) m[pos[w]][j] = r;
    }
    m[pos[0]][dim] = Rat(1);

    // Gaussian elimination on the augmented system
    size_t row = 0;
    std::vector<size_t> pivot_of_col(dim, SIZE_MAX);
    for (size_t col = 0; col < dim && row < dim; ++col) {
        size_t p = SIZE_MAX;
        for (size_t r = row; r < dim; ++r)
            if (!m[r][col].is_zero()) {
                p = r;
                break;
            }
        if (p == SIZE_MAX) continue;
        std::swap(m[p], m[row]);
        Rat inv = Rat(1) / m[row][col];
        for (size_t c = col; c <= dim; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < dim; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (size_t c = col; c <= dim; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (size_t r = row; r < dim; ++r)
        if (!m[r][dim].is_zero()) return std::nullopt;  // inconsistent: not a unit

    CliffElem x(cfg);
    for (size_t c = 0; c < dim; ++c)
        if (pivot_of_col[c] != SIZE_MAX) x.set_term(basis[c], m[pivot_of_col[c]][dim]);

    CliffElem one = CliffElem::one(cfg);
    if (!(a * x == one) || !(x * a == one)) return std::nullopt;
    return x;
}

}  // namespace cliffsym
