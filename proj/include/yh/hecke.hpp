#pragma once

#include <map>

#include "yh/braid.hpp"
#include "yh/ratfun.hpp"
#include "yh/symgroup.hpp"

namespace yh {

// Element of the Iwahori-Hecke algebra H_n(q), sparse over the basis {G_w}.
// Coefficients are rational functions in the global symbols (q in particular).
class HElement {
  public:
    using TermMap = std::map<Permutation, RatFun>;

    explicit HElement(int n) : n_(n) {
        if (n < 1) throw DomainError("algebra needs n >= 1");
    }
    static HElement unit(int n);
    static HElement generator(int n, int i);  // G_{s_i}

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Permutation& w, const RatFun& c);
    RatFun coefficient(const Permutation& w) const;

    HElement operator+(const HElement& o) const;
    HElement operator-(const HElement& o) const;
    HElement scaled(const RatFun& c) const;

    // Exact equality of coefficients, termwise.
    bool operator==(const HElement& o) const;
    bool operator!=(const HElement& o) const { return !(*this == o); }

  private:
    int n_;
    TermMap terms_;
};

// Right multiplication by G_i^{+-1}.
HElement h_mul_gen(const HElement& h, int i, int sign);
HElement h_mul(const HElement& a, const HElement& b);

// Image of a braid word under sigma_i -> G_i.
HElement h_from_braid(const BraidWord& alpha);

// Closed form for G_i^m: ((q^m-1)/(q+1))(G_i + 1) + 1 for even m and
// ((q^m+1)/(q+1))(G_i + 1) - 1 for odd m.
HElement h_power(int i, int m, int n);

// The same element inside H_m(q), m >= n, via the standard inclusion.
HElement h_embedded(const HElement& h, int m);

// Markov trace with parameter zeta (symbolic by default): tau(1) = 1,
// tau(h G_n) = zeta tau(h), computed by peeling the top strand level by level.
RatFun ocneanu_trace(const HElement& h, const RatFun& zeta = RatFun::symbol(SYM_ZETA));

}  // namespace yh
