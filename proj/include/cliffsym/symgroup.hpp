#pragma once

#include <string>
#include <vector>

#include "cliffsym/parallel.hpp"
#include "cliffsym/qseries.hpp"

namespace cliffsym {

/* Permutation of {1..n}, stored as the image list w(1),...,w(n). */
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static Perm transposition(int n, int i);  // s_i = (i, i+1)
    static Perm longest(int n);               // w_0

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    bool is_identity() const;
    std::string str() const;

    friend Perm compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  private:
    std::vector<int> img_;
};

using ReducedWord = std::vector<int>;

int length(const Perm& w);  // number of inversions
/* Canonical reduced word: repeatedly strip the smallest descent on the left. */
ReducedWord reduced_word(const Perm& w);
Perm perm_from_word(int n, const ReducedWord& word);
std::vector<Perm> all_perms(int n);
std::vector<ReducedWord> all_reduced_words(const Perm& w);

/* Signed permutation of {±1..±n}: img_[i-1] = w(i), w(-i) = -w(i). */
class SignedPerm {
  public:
    explicit SignedPerm(std::vector<int> images) : img_(std::move(images)) {}
    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return i > 0 ? img_[static_cast<size_t>(i) - 1] : -img_[static_cast<size_t>(-i) - 1]; }
    int negatives() const;
    const std::vector<int>& images() const { return img_; }

  private:
    std::vector<int> img_;
};

/* Inversion statistics from the q-order lemma: type BC counts the pairs
 * {(i,j) | i<j, w(i)>w(j)} together with {(-i,j) | i<=j, w(-i)>w(j)};
 * type D restricts the second set to i < j. */
int bc_length(const SignedPerm& w);
int d_length(const SignedPerm& w);
std::vector<SignedPerm> bc_elements(int n);
std::vector<SignedPerm> d_elements(int n);

enum class CoxeterType { A, BC, D };

/* ord_q(W) = sum over the group of q^{l(w)}, by brute-force enumeration.
 * Bounds: A needs n <= 7, BC and D need n <= 5; beyond that a resource
 * error (std::length_error) is raised. */
QSeries coxeter_qorder(CoxeterType type, int n, int order = kDefaultQOrder,
                       ExecMode mode = ExecMode::serial);
/* Independent serial reference: recursive enumeration without the length
 * tables used by the partitioned kernel. */
QSeries coxeter_qorder_serial_reference(CoxeterType type, int n, int order = kDefaultQOrder);

}  // namespace cliffsym
