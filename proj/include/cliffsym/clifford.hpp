#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffsym/rational.hpp"
#include "cliffsym/symgroup.hpp"

namespace cliffsym {

enum class Parity : uint8_t { even = 0, odd = 1 };
enum class CliffMode : uint8_t { full, quotient };

/* Index set with Z/2 parities. In quotient mode the algebra is
 * C_I = C_n/(c_i : i even): generators at even indices act as zero.
 * In full mode every c_i is present (the parity list is all-odd).
 * `boundary` is the parity assigned to indices outside 1..n; it decides
 * gamma factors at the edge of the index window (default even, so
 * gamma_{n,n+1} = 1 as in the kappa/cyclotomic conventions; the odd
 * specialization tables use an odd boundary). */
class ParityConfig {
  public:
    ParityConfig() = default;
    ParityConfig(int n, uint32_t odd_mask, CliffMode mode = CliffMode::quotient,
                 Parity boundary = Parity::even);

    static ParityConfig all_even(int n);
    static ParityConfig all_odd(int n, Parity boundary = Parity::even);
    static ParityConfig full(int n);
    static ParityConfig from_parities(const std::vector<int>& bits, CliffMode mode = CliffMode::quotient,
                                      Parity boundary = Parity::even);

    int n() const { return n_; }
    CliffMode mode() const { return mode_; }
    Parity boundary() const { return boundary_; }
    uint32_t odd_mask() const { return odd_mask_; }

    Parity parity(int i) const;        // 1-based; out of range yields boundary
    bool is_active(int i) const;       // c_i nonzero in this algebra
    uint32_t active_mask() const;      // bits of active generator indices
    int active_count() const;          // log2 of dim_k C_I

    /* Restriction to the first m indices (same mode/boundary). */
    ParityConfig prefix(int m) const;

    std::string str() const;

    friend bool operator==(const ParityConfig& a, const ParityConfig& b)
    {
        return a.n_ == b.n_ && a.odd_mask_ == b.odd_mask_ && a.mode_ == b.mode_ && a.boundary_ == b.boundary_;
    }

  private:
    int n_ = 0;
    uint32_t odd_mask_ = 0;
    CliffMode mode_ = CliffMode::quotient;
    Parity boundary_ = Parity::even;
};

/* Strictly increasing product of c's, stored as a bitmask (bit i-1 = c_i). */
using CWord = uint32_t;

CWord word_mul(CWord a, CWord b);  // symmetric difference
/* Sign of c^a * c^b -> c^{a xor b}: (-1)^{#{(x,y) in a x b : x > y}},
 * with squares collapsing to +1. */
int word_mul_sign(CWord a, CWord b);
int word_length(CWord w);
std::vector<int> word_indices(CWord w);
/* Lexicographic order on the ascending index sequences. */
bool word_lex_less(CWord a, CWord b);
std::string word_str(CWord w);

/* Exact-rational element of C_n or of the quotient C_I. Terms carry the
 * canonical sorted word form; all signs come from sorting. */
class CliffElem {
  public:
    CliffElem() = default;
    explicit CliffElem(ParityConfig cfg) : cfg_(std::move(cfg)) {}

    static CliffElem zero(const ParityConfig& cfg) { return CliffElem(cfg); }
    static CliffElem scalar(const ParityConfig& cfg, Rat r);
    static CliffElem one(const ParityConfig& cfg) { return scalar(cfg, Rat(1)); }
    static CliffElem generator(const ParityConfig& cfg, int i);
    static CliffElem word(const ParityConfig& cfg, CWord w, Rat coeff = Rat(1));

    const ParityConfig& cfg() const { return cfg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<CWord, Rat>& terms() const { return terms_; }
    Rat coeff(CWord w) const;
    void set_term(CWord w, Rat r);  // normalizes: drops zeros and dead words

    CliffElem operator-() const;
    CliffElem& operator+=(const CliffElem& o);
    CliffElem& operator-=(const CliffElem& o);
    friend CliffElem operator+(CliffElem a, const CliffElem& b) { return a += b; }
    friend CliffElem operator-(CliffElem a, const CliffElem& b) { return a -= b; }
    friend CliffElem operator*(const CliffElem& a, const CliffElem& b);
    CliffElem scaled(const Rat& r) const;

    friend bool operator==(const CliffElem& a, const CliffElem& b)
    {
        return a.cfg_ == b.cfg_ && a.terms_ == b.terms_;
    }

    /* 0 or 1 when homogeneous (word lengths all even / all odd). */
    std::optional<int> parity_of() const;

    /* Relabel c_i -> c_{w(i)} and re-sort with signs. */
    CliffElem relabel(const Perm& w) const;

    std::string str() const;

  private:
    ParityConfig cfg_;
    std::map<CWord, Rat> terms_;
};

/* gamma_{i,i+dir} = (±c_i)^{|i||i+dir|} with 0^0 = 1: ±c_i when both
 * indices are odd (boundary parity applies out of range), else 1. */
CliffElem gamma(const ParityConfig& cfg, int i, int dir);

/* Exact two-sided inverse via the linear system a*x = 1 over the word
 * basis, verified from both sides; nullopt when a is not a unit. */
std::optional<CliffElem> cliff_inverse(const CliffElem& a);

}  // namespace cliffsym
