#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliffsym {

inline constexpr int kDefaultQOrder = 24;

/* Truncated formal power series in q with integer coefficients, exact in
 * every coefficient up to the truncation order. Division is defined only
 * when the divisor's lowest nonzero coefficient is a unit (+-1); the
 * localisation at (1-q) is covered by geometric_inverse. */
class QSeries {
  public:
    explicit QSeries(int order = kDefaultQOrder);

    static QSeries zero(int order = kDefaultQOrder);
    static QSeries one(int order = kDefaultQOrder);
    static QSeries monomial(int power, long long coeff = 1, int order = kDefaultQOrder);

    int order() const { return order_; }
    long long coeff(int k) const;
    void set_coeff(int k, long long v);
    const std::vector<long long>& coeffs() const { return c_; }

    bool is_zero() const;
    /* True when all coefficients above d vanish (within the truncation). */
    bool is_polynomial_of_degree_at_most(int d) const;

    QSeries truncated(int order) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries& a, const QSeries& b);

    QSeries scaled(long long k) const;
    QSeries pow(int e) const;

    /* Exact division; requires the divisor's lowest nonzero coefficient
     * to be +-1. Throws std::domain_error otherwise. */
    QSeries divided_by(const QSeries& d) const;

    std::string str() const;

  private:
    int order_;
    std::vector<long long> c_;
};

QSeries qint(int n, int order = kDefaultQOrder);
QSeries qfactorial(int n, int order = kDefaultQOrder);
/* (2n)_q!! = (2n)_q (2n-2)_q ... (2)_q; the argument is 2n. */
QSeries qdoublefactorial(int two_n, int order = kDefaultQOrder);
/* Computed as (n)_q! / ((k)_q! (n-k)_q!) by exact series division; the
 * quotient is checked to be a polynomial of degree k(n-k) and to multiply
 * back exactly, so a nonzero remainder signals an arithmetic bug. */
QSeries qbinomial(int n, int k, int order = kDefaultQOrder);
QSeries qmultinomial(int n, const std::vector<int>& parts, int order = kDefaultQOrder);
/* Truncation of (1-q)^{-n}, n >= 1. */
QSeries geometric_inverse(int n, int order = kDefaultQOrder);
/* The polynomial 1 - q. */
QSeries one_minus_q(int order = kDefaultQOrder);

}  // namespace cliffsym
