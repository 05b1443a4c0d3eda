#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cliffsym {

/* Exact rational scalar. Always kept canonical: reduced to lowest terms,
 * denominator > 0, zero stored as 0/1. */
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den)
    {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat from_string(const std::string& s)
    {
        Rat r;
        r.v_ = mpq_class(s);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const
    {
        Rat r;
        r.v_ = -v_;
        return r;
    }
    Rat& operator+=(const Rat& o)
    {
        v_ += o.v_;
        return *this;
    }
    Rat& operator-=(const Rat& o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rat& operator*=(const Rat& o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rat& operator/=(const Rat& o)
    {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    /* "p" when the denominator is 1, else "p/q". */
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

inline Rat half() { return Rat(1, 2); }

}  // namespace cliffsym
