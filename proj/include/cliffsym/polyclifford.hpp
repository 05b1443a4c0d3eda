#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffsym/clifford.hpp"

namespace cliffsym {

inline constexpr int kMaxVars = 8;

using ExpVec = std::array<uint8_t, kMaxVars>;

/* Monomial c^w * y^e in the normal form with the Clifford word on the
 * left. Polynomial degree is the total y-exponent; c's have degree 0. */
struct Mono {
    CWord w = 0;
    ExpVec e{};

    int degree() const
    {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.w == b.w && a.e == b.e; }
};

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const
    {
        if (a.w != b.w) return word_lex_less(a.w, b.w);
        return a.e < b.e;
    }
};

/* Element of PolC in normal form: sum of coeff * c^w * y^e terms over a
 * fixed ParityConfig. Moving a c past y's of the same index costs a sign;
 * that is the only noncommutativity between the two halves. */
class PolyCliff {
  public:
    PolyCliff() = default;
    explicit PolyCliff(ParityConfig cfg) : cfg_(std::move(cfg)) {}

    static PolyCliff zero(const ParityConfig& cfg) { return PolyCliff(cfg); }
    static PolyCliff scalar(const ParityConfig& cfg, Rat r);
    static PolyCliff one(const ParityConfig& cfg) { return scalar(cfg, Rat(1)); }
    static PolyCliff y(const ParityConfig& cfg, int i);
    static PolyCliff c(const ParityConfig& cfg, int i);
    static PolyCliff monomial(const ParityConfig& cfg, Mono m, Rat coeff = Rat(1));
    static PolyCliff from_cliff(const CliffElem& a);

    const ParityConfig& cfg() const { return cfg_; }
    const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Mono& m, Rat r);

    PolyCliff operator-() const;
    PolyCliff& operator+=(const PolyCliff& o);
    PolyCliff& operator-=(const PolyCliff& o);
    friend PolyCliff operator+(PolyCliff a, const PolyCliff& b) { return a += b; }
    friend PolyCliff operator-(PolyCliff a, const PolyCliff& b) { return a -= b; }
    friend PolyCliff operator*(const PolyCliff& a, const PolyCliff& b);
    PolyCliff scaled(const Rat& r) const;
    PolyCliff pow(int e) const;

    friend bool operator==(const PolyCliff& a, const PolyCliff& b)
    {
        return a.cfg_ == b.cfg_ && a.terms_ == b.terms_;
    }

    bool is_homogeneous() const;
    /* Degree of a homogeneous nonzero element. */
    std::optional<int> degree() const;
    int max_degree() const;
    PolyCliff component(int d) const;

    /* Extract the Clifford part of a degree-zero element. */
    std::optional<CliffElem> as_cliff() const;

    std::string str() const;

  private:
    ParityConfig cfg_;
    std::map<Mono, Rat, MonoLess> terms_;
};

/* Algebra automorphism permuting the y's and c's independently:
 * y_i -> y_{w(i)}, c_i -> c_{w(i)}, with re-sorting signs. */
PolyCliff sn_act(const Perm& w, const PolyCliff& f);

/* All monomials c^w y^e of polynomial degree d, ordered word-lex then
 * exponent-lex; this ordering fixes the coordinates used everywhere. */
std::vector<Mono> degree_basis(const ParityConfig& cfg, int d);

/* Coordinates of a homogeneous element in degree_basis(cfg, d). */
std::vector<Rat> coords_in_degree(const PolyCliff& f, int d);

}  // namespace cliffsym
