#pragma once

#include <string>
#include <vector>

#include "yh/rational.hpp"

namespace yh {

// Dense univariate polynomial over Q; coefficient of x^i lives at index i.
// Normalized form has no trailing zeros; the zero polynomial is {}.
using QPoly = std::vector<Rational>;

QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
// Division with remainder; the divisor must be nonzero.
void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);

// Phi_d, the d-th cyclotomic polynomial, via (x^d - 1) / prod_{e|d, e<d} Phi_e.
// Monic with integer coefficients; memoized, safe for concurrent callers.
const QPoly& cyclotomic_polynomial(int d);

// Element of Q(zeta_d), stored as a residue modulo Phi_d. Values that are
// plain rationals demote to conductor 1 so that representation is canonical;
// binary operations promote a rational operand to the other conductor.
class Cyclotomic {
  public:
    Cyclotomic() : d_(1), c_(1, Rational(0)) {}
    Cyclotomic(const Rational& r) : d_(1), c_(1, r) {}
    Cyclotomic(long n) : d_(1), c_(1, Rational(n)) {}

    static Cyclotomic zeta(int d, long power = 1);
    static Cyclotomic from_coeffs(int d, std::vector<Rational> coeffs);

    int conductor() const { return d_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return d_ == 1; }
    const Rational& rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic inverse() const;  // throws DomainError on zero

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string render() const;

  private:
    Cyclotomic(int d, std::vector<Rational> c) : d_(d), c_(std::move(c)) {}
    void normalize();
    Cyclotomic promoted(int d) const;

    int d_;
    std::vector<Rational> c_;  // length deg Phi_d
};

Cyclotomic cyc_inv(const Cyclotomic& a);

}  // namespace yh
