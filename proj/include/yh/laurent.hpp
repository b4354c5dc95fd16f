#pragma once

#include <map>
#include <string>

#include "yh/cyclotomic.hpp"
#include "yh/params.hpp"

namespace yh {

// Sparse multivariate Laurent polynomial in the parameter symbols with
// cyclotomic coefficients. Stored zero coefficients are erased, so equality
// is term-map equality and iteration order is the canonical monomial order.
class LaurentPoly {
  public:
    using TermMap = std::map<ExpVec, Cyclotomic, GradedLex>;

    LaurentPoly() = default;

    static LaurentPoly constant(Cyclotomic c);
    static LaurentPoly one() { return constant(Cyclotomic(1)); }
    static LaurentPoly symbol(int s, int exp = 1);
    static LaurentPoly monomial(const ExpVec& e, Cyclotomic c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Cyclotomic& constant_value() const;  // requires is_constant
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const ExpVec& e, const Cyclotomic& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Cyclotomic& c) const;
    LaurentPoly shifted(const ExpVec& delta) const;  // multiply by a monomial
    LaurentPoly pow(unsigned m) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Componentwise minimum exponent over all terms (0 if empty).
    ExpVec min_exponents() const;
    const Cyclotomic& leading_coefficient() const;  // largest monomial

    std::string render() const;

  private:
    TermMap terms_;
};

}  // namespace yh
