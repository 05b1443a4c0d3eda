#include "cliffsym/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cliffsym {

Perm::Perm(std::vector<int> images) : img_(std::move(images))
{
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 1 || v > n() || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("Perm: images are not a bijection of 1..n");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Perm Perm::identity(int n)
{
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i)
{
    if (i < 1 || i >= n) throw std::invalid_argument("Perm::transposition: index out of range");
    Perm w = identity(n);
    std::swap(w.img_[static_cast<size_t>(i) - 1], w.img_[static_cast<size_t>(i)]);
    return w;
}

Perm Perm::longest(int n)
{
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = n + 1 - i;
    return Perm(std::move(v));
}

Perm Perm::inverse() const
{
    std::vector<int> v(img_.size());
    for (int i = 1; i <= n(); ++i) v[static_cast<size_t>((*this)(i)) - 1] = i;
    return Perm(std::move(v));
}

bool Perm::is_identity() const
{
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Perm::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= n(); ++i) os << (i > 1 ? "," : "") << (*this)(i);
    os << "]";
    return os.str();
}

Perm compose(const Perm& a, const Perm& b)
{
    if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> v(a.img_.size());
    for (int i = 1; i <= a.n(); ++i) v[static_cast<size_t>(i) - 1] = a(b(i));
    return Perm(std::move(v));
}

int length(const Perm& w)
{
    int inv = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

ReducedWord reduced_word(const Perm& w)
{
    ReducedWord word;
    Perm cur = w;
    for (;;) {
        int i = 0;
        for (int k = 1; k < cur.n(); ++k)
            if (cur(k) > cur(k + 1)) {
                i = k;
                break;
            }
        if (i == 0) break;
        // cur has a descent at i, so cur * s_i is shorter; collect letters
        // so that the product s_{i_1}...s_{i_r} rebuilds w.
        word.push_back(i);
        cur = compose(cur, Perm::transposition(cur.n(), i));
    }
    // The loop peels w = s_{j_1}... from the left-descent side of w^{-1}?
    // No: it factors w = cur * s_{i_r} * ... * s_{i_1}; reverse to get w.
    std::reverse(word.begin(), word.end());
    return word;
}

Perm perm_from_word(int n, const ReducedWord& word)
{
    Perm w = Perm::identity(n);
    for (int i : word) w = compose(w, Perm::transposition(n, i));
    return w;
}

std::vector<Perm> all_perms(int n)
{
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> res;
    do res.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return res;
}

static void collect_reduced(const Perm& w, ReducedWord& prefix, std::vector<ReducedWord>& out)
{
    if (w.is_identity()) {
        out.push_back(prefix);
        return;
    }
    int len = length(w);
    for (int i = 1; i < w.n(); ++i) {
        Perm next = compose(Perm::transposition(w.n(), i), w);  // s_i * w
        if (length(next) == len - 1) {
            prefix.push_back(i);
            collect_reduced(next, prefix, out);
            prefix.pop_back();
        }
    }
}

std::vector<ReducedWord> all_reduced_words(const Perm& w)
{
    std::vector<ReducedWord> out;
    ReducedWord prefix;
    collect_reduced(w, prefix, out);
    return out;
}

int SignedPerm::negatives() const
{
    int k = 0;
    for (int v : img_)
        if (v < 0) ++k;
    return k;
}

int bc_length(const SignedPerm& w)
{
    int inv = 0;
    int n = w.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (w(-i) > w(j)) ++inv;
    return inv;
}

int d_length(const SignedPerm& w)
{
    int inv = 0;
    int n = w.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) > w(j)) ++inv;
            if (w(-i) > w(j)) ++inv;
        }
    return inv;
}

static void check_enum_bound(CoxeterType type, int n)
{
    int bound = type == CoxeterType::A ? 7 : 5;
    if (n < 1 || n > bound) throw std::length_error("coxeter_qorder: n out of enumerable bounds");
}

std::vector<SignedPerm> bc_elements(int n)
{
    std::vector<SignedPerm> out;
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> img = v;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) img[static_cast<size_t>(i)] = -img[static_cast<size_t>(i)];
            out.emplace_back(std::move(img));
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<SignedPerm> d_elements(int n)
{
    std::vector<SignedPerm> out;
    for (auto& w : bc_elements(n))
        if (w.negatives() % 2 == 0) out.push_back(w);
    return out;
}

QSeries coxeter_qorder(CoxeterType type, int n, int order, ExecMode mode)
{
    check_enum_bound(type, n);
    if (type == CoxeterType::A) {
        // Partition S_n by the image of 1 and enumerate blocks independently.
        std::vector<QSeries> block(static_cast<size_t>(n), QSeries(order));
        parallel_for(mode, n, [&](std::ptrdiff_t b) {
            QSeries acc(order);
            std::vector<int> rest;
            for (int v = 1; v <= n; ++v)
                if (v != b + 1) rest.push_back(v);
            do {
                std::vector<int> img;
                img.push_back(static_cast<int>(b) + 1);
                img.insert(img.end(), rest.begin(), rest.end());
                Perm w{img};
                int l = length(w);
                acc.set_coeff(l, acc.coeff(l) + 1);
            } while (std::next_permutation(rest.begin(), rest.end()));
            block[static_cast<size_t>(b)] = acc;
        });
        QSeries total(order);
        for (auto& s : block) total += s;
        return total;
    }
    auto elems = type == CoxeterType::BC ? bc_elements(n) : d_elements(n);
    std::vector<int> lengths(elems.size());
    parallel_for(mode, static_cast<std::ptrdiff_t>(elems.size()), [&](std::ptrdiff_t i) {
        lengths[static_cast<size_t>(i)] =
            type == CoxeterType::BC ? bc_length(elems[static_cast<size_t>(i)]) : d_length(elems[static_cast<size_t>(i)]);
    });
    QSeries total(order);
    for (int l : lengths) total.set_coeff(l, total.coeff(l) + 1);
    return total;
}

QSeries coxeter_qorder_serial_reference(CoxeterType type, int n, int order)
{
    check_enum_bound(type, n);
    QSeries total(order);
    if (type == CoxeterType::A) {
        for (auto& w : all_perms(n)) {
            int l = length(w);
            total.set_coeff(l, total.coeff(l) + 1);
        }
        return total;
    }
    auto elems = type == CoxeterType::BC ? bc_elements(n) : d_elements(n);
    for (auto& w : elems) {
        int l = type == CoxeterType::BC ? bc_length(w) : d_length(w);
        total.set_coeff(l, total.coeff(l) + 1);
    }
    return total;
}

}  // namespace cliffsym
