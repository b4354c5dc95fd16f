#pragma once

#include <map>
#include <utility>
#include <vector>

#include "yh/braid.hpp"
#include "yh/esystem.hpp"
#include "yh/hecke.hpp"
#include "yh/ratfun.hpp"
#include "yh/symgroup.hpp"

namespace yh {

// Exponents of t_1^{k_1}...t_n^{k_n}, reduced mod d.
struct FramingVector {
    std::vector<int> k;

    bool is_zero() const {
        for (int x : k)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const FramingVector& o) const { return k == o.k; }
    bool operator<(const FramingVector& o) const { return k < o.k; }
};

// Element of Y_{d,n}(u), sparse over the split basis t^k g_w. Coefficients
// are rational functions in the global symbols (u in particular).
class YElement {
  public:
    using Key = std::pair<FramingVector, Permutation>;
    using TermMap = std::map<Key, RatFun>;

    YElement(int n, int d) : n_(n), d_(d) {
        if (n < 1 || d < 1) throw DomainError("algebra needs n >= 1 and d >= 1");
    }
    static YElement unit(int n, int d);
    static YElement generator(int n, int d, int i);       // g_i
    static YElement framing(int n, int d, int j, int m);  // t_j^m

    int n() const { return n_; }
    int d() const { return d_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const FramingVector& f, const Permutation& w, const RatFun& c);
    RatFun coefficient(const FramingVector& f, const Permutation& w) const;

    YElement operator+(const YElement& o) const;
    YElement operator-(const YElement& o) const;
    YElement scaled(const RatFun& c) const;

    bool operator==(const YElement& o) const;
    bool operator!=(const YElement& o) const { return !(*this == o); }

  private:
    int n_, d_;
    TermMap terms_;
};

// The idempotent e_{i,k} = (1/d) sum_s t_i^s t_k^{d-s}; e_{i,i} = 1.
YElement e_expand(int i, int k, int n, int d);

// Right multiplication by g_i^{+-1}, t_j^m, e_{i,i+1}, and full products.
YElement y_mul_gen(const YElement& y, int i, int sign);
YElement y_mul_framing(const YElement& y, int j, int m);
YElement y_mul_e(const YElement& y, int i);
YElement y_mul(const YElement& a, const YElement& b);

// Image of a braid word under sigma_i -> g_i.
YElement y_from_braid(const BraidWord& alpha, int d);

// Closed form for g_i^m: ((u^m-1)/(u+1))(e_i g_i + e_i) + 1 for even m and
// ((u^m-u)/(u+1))(e_i g_i + e_i) + g_i for odd m.
YElement y_power(int i, int m, int n, int d);

// The same element inside Y_{d,m}(u), m >= n, via the standard inclusion.
YElement y_embedded(const YElement& y, int m);

// Trace values on framing powers: value(m) for t^m. Symbolic mode carries the
// symbols x_1..x_{d-1}; specialized mode holds the solution values x_m.
struct FramingCharacter {
    int d;
    bool is_symbolic;
    std::vector<RatFun> values;  // size d, values[0] = 1

    static FramingCharacter symbolic(int d);
    static FramingCharacter specialized(const ESolution& sol);

    const RatFun& operator()(int m) const { return values[static_cast<std::size_t>(m)]; }
    // Bindings x_m -> value, for comparing symbolic results to specialized ones.
    Bindings bindings() const;
};

// Markov trace with framing rule tr(a t_{n+1}^m) = x_m tr(a) and strand rule
// tr(a g_n) = z tr(a), peeled level by level.
RatFun juyumaya_trace(const YElement& y, const FramingCharacter& chr,
                      const RatFun& z = RatFun::symbol(SYM_Z));

// The linear map phi: fixes g_i, sends a trailing t_{n+1}^m factor to the
// scalar chr(m). Requires a specialized character; the image is spanned by
// {g_w : w a descending-subset element} with all framings zero.
YElement phi_map(const YElement& y, const FramingCharacter& chr);

// The linear map t^f g_w -> (prod_j x_{f_j}) G_w into H_n(u). Only defined
// for singleton S (E = 1), where the framing values are multiplicative.
HElement gamma_map(const YElement& y, const ESolution& sol);

}  // namespace yh
