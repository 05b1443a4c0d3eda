#include "cliffsym/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cliffsym {

QSeries::QSeries(int order) : order_(order), c_(static_cast<size_t>(order) + 1, 0)
{
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
}

QSeries QSeries::zero(int order) { return QSeries(order); }

QSeries QSeries::one(int order)
{
    QSeries s(order);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::monomial(int power, long long coeff, int order)
{
    QSeries s(order);
    if (power < 0) throw std::invalid_argument("QSeries: negative power");
    if (power <= order) s.c_[power] = coeff;
    return s;
}

long long QSeries::coeff(int k) const
{
    if (k < 0 || k > order_) return 0;
    return c_[k];
}

void QSeries::set_coeff(int k, long long v)
{
    if (k < 0 || k > order_) throw std::out_of_range("QSeries::set_coeff");
    c_[k] = v;
}

bool QSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x == 0; });
}

bool QSeries::is_polynomial_of_degree_at_most(int d) const
{
    for (int k = std::max(0, d + 1); k <= order_; ++k)
        if (c_[k] != 0) return false;
    return true;
}

QSeries QSeries::truncated(int order) const
{
    QSeries s(order);
    for (int k = 0; k <= std::min(order, order_); ++k) s.c_[k] = c_[k];
    return s;
}

QSeries QSeries::operator-() const
{
    QSeries s(*this);
    for (auto& x : s.c_) x = -x;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b)
{
    int order = std::min(a.order_, b.order_);
    QSeries s(order);
    for (int i = 0; i <= order; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
}

bool operator==(const QSeries& a, const QSeries& b)
{
    int order = std::min(a.order_, b.order_);
    for (int k = 0; k <= order; ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

QSeries QSeries::scaled(long long k) const
{
    QSeries s(*this);
    for (auto& x : s.c_) x *= k;
    return s;
}

QSeries QSeries::pow(int e) const
{
    if (e < 0) throw std::invalid_argument("QSeries::pow: negative exponent");
    QSeries r = one(order_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

QSeries QSeries::divided_by(const QSeries& d) const
{
    int order = std::min(order_, d.order_);
    int low = -1;
    for (int k = 0; k <= order; ++k)
        if (d.c_[k] != 0) {
            low = k;
            break;
        }
    if (low < 0 || (d.c_[low] != 1 && d.c_[low] != -1))
        throw std::domain_error("QSeries: divisor is not a unit in the truncated ring");
    for (int k = 0; k < low; ++k)
        if (coeff(k) != 0) throw std::domain_error("QSeries: quotient is not a power series");

    int qorder = order - low;
    QSeries q(qorder);
    std::vector<long long> rem(c_.begin() + low, c_.begin() + order + 1);
    long long unit = d.c_[low];
    for (int k = 0; k <= qorder; ++k) {
        long long t = rem[k] * unit;  // unit is +-1
        q.c_[k] = t;
        if (t == 0) continue;
        for (int j = 0; k + j <= qorder && low + j <= order; ++j) rem[k + j] -= t * d.c_[low + j];
    }
    return q;
}

std::string QSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << (c_[k] > 0 ? " + " : " - ");
        else if (c_[k] < 0)
            os << "-";
        long long a = c_[k] > 0 ? c_[k] : -c_[k];
        if (k == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

QSeries qint(int n, int order)
{
    if (n < 0) throw std::invalid_argument("qint: negative n");
    QSeries s(order);
    for (int k = 0; k < n && k <= order; ++k) s.set_coeff(k, 1);
    return s;
}

QSeries qfactorial(int n, int order)
{
    QSeries s = QSeries::one(order);
    for (int k = 1; k <= n; ++k) s = s * qint(k, order);
    return s;
}

QSeries qdoublefactorial(int two_n, int order)
{
    if (two_n % 2 != 0) throw std::invalid_argument("qdoublefactorial: argument must be even");
    QSeries s = QSeries::one(order);
    for (int k = two_n; k >= 2; k -= 2) s = s * qint(k, order);
    return s;
}

QSeries qbinomial(int n, int k, int order)
{
    if (k < 0 || k > n) throw std::invalid_argument("qbinomial: need 0 <= k <= n");
    QSeries q = qfactorial(n, order).divided_by(qfactorial(k, order) * qfactorial(n - k, order));
    QSeries back = q * qfactorial(k, order) * qfactorial(n - k, order);
    if (!(back == qfactorial(n, order)) || !q.is_polynomial_of_degree_at_most(k * (n - k)))
        throw std::logic_error("qbinomial: nonzero remainder (arithmetic bug)");
    return q.truncated(order);
}

QSeries qmultinomial(int n, const std::vector<int>& parts, int order)
{
    int sum = 0;
    QSeries denom = QSeries::one(order);
    int top_deg = n * (n - 1) / 2;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("qmultinomial: negative part");
        sum += p;
        denom = denom * qfactorial(p, order);
        top_deg -= p * (p - 1) / 2;
    }
    if (sum != n) throw std::invalid_argument("qmultinomial: parts must sum to n");
    QSeries q = qfactorial(n, order).divided_by(denom);
    if (!(q * denom == qfactorial(n, order)) || !q.is_polynomial_of_degree_at_most(top_deg))
        throw std::logic_error("qmultinomial: nonzero remainder (arithmetic bug)");
    return q.truncated(order);
}

QSeries geometric_inverse(int n, int order)
{
    if (n < 1) throw std::invalid_argument("geometric_inverse: need n >= 1");
    return QSeries::one(order).divided_by(one_minus_q(order).pow(n));
}

QSeries one_minus_q(int order)
{
    QSeries s = QSeries::one(order);
    if (order >= 1) s.set_coeff(1, -1);
    return s;
}

}  // namespace cliffsym
