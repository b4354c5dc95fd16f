#pragma once

#include <map>
#include <string>

#include "yh/laurent.hpp"

namespace yh {

// Element of the fraction field of the Laurent polynomial ring. Not kept in
// gcd-reduced form: equality is decided by cross-multiplication. Stored form
// is normalized by a common monomial shift (so no negative exponents survive)
// and a monic denominator, which keeps rendering deterministic and growth
// bounded at this scale.
class RatFun {
  public:
    RatFun() : num_(), den_(LaurentPoly::one()) {}
    RatFun(long n) : num_(LaurentPoly::constant(Cyclotomic(n))), den_(LaurentPoly::one()) {}
    RatFun(const Rational& r) : num_(LaurentPoly::constant(Cyclotomic(r))), den_(LaurentPoly::one()) {}
    RatFun(const Cyclotomic& c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::one()) {}
    RatFun(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
    RatFun(LaurentPoly num, LaurentPoly den);

    static RatFun symbol(int s, int exp = 1);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Cyclotomic constant_value() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun inverse() const;  // throws DomainError on zero
    RatFun pow(int m) const;

    std::string render() const;

  private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

bool ratfun_eq(const RatFun& a, const RatFun& b);
inline bool operator==(const RatFun& a, const RatFun& b) { return ratfun_eq(a, b); }
inline bool operator!=(const RatFun& a, const RatFun& b) { return !ratfun_eq(a, b); }

using Bindings = std::map<int, RatFun>;

// Simultaneous substitution; unbound symbols stay. Throws DomainError if the
// denominator specializes to zero.
RatFun substitute(const RatFun& a, const Bindings& bindings);
RatFun substitute(const LaurentPoly& p, const Bindings& bindings);

// Parses the textual form produced by RatFun::render (and any expression over
// symbols, zeta_d constants, integers, + - * / ^ and parentheses).
RatFun parse_ratfun(const std::string& text);

}  // namespace yh
