#include "yh/yokonuma.hpp"

#include <algorithm>

namespace yh {

namespace {

// g_word t^h = t^{h'} g_word: pushing one exponent vector left through one
// generator g_l swaps the entries at strands l, l+1 (relation t_j g_l =
// g_l t_{s_l(j)}), so a word is processed letter by letter from the right.
FramingVector push_left(FramingVector h, const std::vector<int>& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::size_t l = static_cast<std::size_t>(*it);
        std::swap(h.k[l - 1], h.k[l]);
    }
    return h;
}

FramingVector add_mod(const FramingVector& a, const FramingVector& b, int d) {
    FramingVector out = a;
    for (std::size_t i = 0; i < out.k.size(); ++i) out.k[i] = (out.k[i] + b.k[i]) % d;
    return out;
}

FramingVector zero_framing(int n) {
    FramingVector f;
    f.k.assign(static_cast<std::size_t>(n), 0);
    return f;
}

}  // namespace

YElement YElement::unit(int n, int d) {
    YElement y(n, d);
    y.terms_.emplace(Key{zero_framing(n), Permutation(n)}, RatFun(1));
    return y;
}

YElement YElement::generator(int n, int d, int i) {
    YElement y(n, d);
    y.terms_.emplace(Key{zero_framing(n), Permutation::transposition(n, i)}, RatFun(1));
    return y;
}

YElement YElement::framing(int n, int d, int j, int m) {
    if (j < 1 || j > n) throw DomainError("framing strand out of range");
    YElement y(n, d);
    FramingVector f = zero_framing(n);
    f.k[static_cast<std::size_t>(j - 1)] = ((m % d) + d) % d;
    y.terms_.emplace(Key{std::move(f), Permutation(n)}, RatFun(1));
    return y;
}

void YElement::add_term(const FramingVector& f, const Permutation& w, const RatFun& c) {
    if (static_cast<int>(f.k.size()) != n_ || w.size() != n_)
        throw DomainError("term size mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{f, w}, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFun YElement::coefficient(const FramingVector& f, const Permutation& w) const {
    auto it = terms_.find(Key{f, w});
    return it == terms_.end() ? RatFun(0) : it->second;
}

YElement YElement::operator+(const YElement& o) const {
    if (n_ != o.n_ || d_ != o.d_) throw DomainError("algebra size mismatch");
    YElement out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, c);
    return out;
}

YElement YElement::operator-(const YElement& o) const {
    if (n_ != o.n_ || d_ != o.d_) throw DomainError("algebra size mismatch");
    YElement out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, -c);
    return out;
}

YElement YElement::scaled(const RatFun& c) const {
    YElement out(n_, d_);
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : terms_) out.add_term(key.first, key.second, coeff * c);
    return out;
}

bool YElement::operator==(const YElement& o) const {
    if (n_ != o.n_ || d_ != o.d_) return false;
    for (const auto& [key, c] : terms_)
        if (!ratfun_eq(c, o.coefficient(key.first, key.second))) return false;
    for (const auto& [key, c] : o.terms_)
        if (!terms_.count(key) && !c.is_zero()) return false;
    return true;
}

YElement e_expand(int i, int k, int n, int d) {
    if (i < 1 || i > n || k < 1 || k > n) throw DomainError("strand index out of range");
    YElement out(n, d);
    RatFun inv_d{Rational(1, d)};
    for (int s = 0; s < d; ++s) {
        FramingVector f = zero_framing(n);
        f.k[static_cast<std::size_t>(i - 1)] = (f.k[static_cast<std::size_t>(i - 1)] + s) % d;
        f.k[static_cast<std::size_t>(k - 1)] =
            (f.k[static_cast<std::size_t>(k - 1)] + (d - s)) % d;
        out.add_term(f, Permutation(n), inv_d);
    }
    return out;
}

YElement y_mul_framing(const YElement& y, int j, int m) {
    if (j < 1 || j > y.n()) throw DomainError("framing strand out of range");
    int d = y.d();
    YElement out(y.n(), d);
    FramingVector delta = zero_framing(y.n());
    delta.k[static_cast<std::size_t>(j - 1)] = ((m % d) + d) % d;
    for (const auto& [key, c] : y.terms()) {
        FramingVector moved = push_left(delta, key.second.reduced_word());
        out.add_term(add_mod(key.first, moved, d), key.second, c);
    }
    return out;
}

YElement y_mul_e(const YElement& y, int i) {
    if (i < 1 || i >= y.n()) throw DomainError("generator index out of range");
    int d = y.d();
    YElement out(y.n(), d);
    RatFun inv_d{Rational(1, d)};
    for (const auto& [key, c] : y.terms()) {
        std::vector<int> word = key.second.reduced_word();
        RatFun coeff = c * inv_d;
        for (int s = 0; s < d; ++s) {
            FramingVector delta = zero_framing(y.n());
            delta.k[static_cast<std::size_t>(i - 1)] = s;
            delta.k[static_cast<std::size_t>(i)] = (delta.k[static_cast<std::size_t>(i)] +
                                                    (d - s)) % d;
            FramingVector moved = push_left(delta, word);
            out.add_term(add_mod(key.first, moved, d), key.second, coeff);
        }
    }
    return out;
}

YElement y_mul_gen(const YElement& y, int i, int sign) {
    if (i < 1 || i >= y.n()) throw DomainError("generator index out of range");
    int d = y.d();
    if (sign < 0) {
        // g_i^-1 = g_i + (u^-1 - 1) e_i + (u^-1 - 1) e_i g_i
        RatFun c = RatFun::symbol(SYM_U, -1) - 1;
        YElement with_e = y_mul_e(y, i);
        return y_mul_gen(y, i, +1) + with_e.scaled(c) + y_mul_gen(with_e, i, +1).scaled(c);
    }
    RatFun u = RatFun::symbol(SYM_U);
    RatFun u1_over_d = (u - 1) * RatFun{Rational(1, d)};
    YElement out(y.n(), d);
    for (const auto& [key, c] : y.terms()) {
        const FramingVector& f = key.first;
        const Permutation& w = key.second;
        if (w.right_ascent(i)) {
            out.add_term(f, w.right_mul_s(i), c);
            continue;
        }
        // w = v s_i with shorter v: t^f g_w g_i = t^f g_v g_i^2, and g_i^2
        // expands to 1 + (u-1) e_i + (u-1) e_i g_i before pushing each
        // framing monomial of e_i left through g_v.
        Permutation v = w.right_mul_s(i);
        std::vector<int> vword = v.reduced_word();
        out.add_term(f, v, c);
        RatFun coeff = c * u1_over_d;
        for (int s = 0; s < d; ++s) {
            FramingVector delta = zero_framing(y.n());
            delta.k[static_cast<std::size_t>(i - 1)] = s;
            delta.k[static_cast<std::size_t>(i)] = (delta.k[static_cast<std::size_t>(i)] +
                                                    (d - s)) % d;
            FramingVector moved = push_left(delta, vword);
            FramingVector merged = add_mod(f, moved, d);
            out.add_term(merged, v, coeff);
            out.add_term(merged, w, coeff);
        }
    }
    return out;
}

YElement y_mul(const YElement& a, const YElement& b) {
    if (a.n() != b.n() || a.d() != b.d()) throw DomainError("algebra size mismatch");
    YElement out(a.n(), a.d());
    for (const auto& [key, c] : b.terms()) {
        YElement cur(a.n(), a.d());
        // a t^f: push the framing left through each term of a.
        for (const auto& [akey, ac] : a.terms()) {
            FramingVector moved = push_left(key.first, akey.second.reduced_word());
            cur.add_term(add_mod(akey.first, moved, a.d()), akey.second, ac);
        }
        for (int letter : key.second.reduced_word()) cur = y_mul_gen(cur, letter, +1);
        out = out + cur.scaled(c);
    }
    return out;
}

YElement y_from_braid(const BraidWord& alpha, int d) {
    YElement y = YElement::unit(alpha.n, d);
    for (int letter : alpha.letters) y = y_mul_gen(y, std::abs(letter), letter > 0 ? +1 : -1);
    return y;
}

YElement y_power(int i, int m, int n, int d) {
    if (m < 0) throw DomainError("y_power needs m >= 0");
    RatFun u = RatFun::symbol(SYM_U);
    RatFun um = u.pow(m);
    YElement e = e_expand(i, i + 1, n, d);
    YElement eg = y_mul_gen(e, i, +1);
    if (m % 2 == 0) {
        RatFun c = (um - 1) / (u + 1);
        return (eg + e).scaled(c) + YElement::unit(n, d);
    }
    RatFun c = (um - u) / (u + 1);
    return (eg + e).scaled(c) + YElement::generator(n, d, i);
}

YElement y_embedded(const YElement& y, int m) {
    if (m < y.n()) throw DomainError("embedding cannot shrink the algebra");
    YElement out(m, y.d());
    for (const auto& [key, c] : y.terms()) {
        FramingVector f = key.first;
        f.k.resize(static_cast<std::size_t>(m), 0);
        out.add_term(f, key.second.embedded(m), c);
    }
    return out;
}

FramingCharacter FramingCharacter::symbolic(int d) {
    if (d < 1) throw DomainError("character needs d >= 1");
    if (sym_x(d - 1) >= MAX_SYMBOLS) throw DomainError("d too large for symbolic mode");
    FramingCharacter chr{d, true, {}};
    chr.values.reserve(static_cast<std::size_t>(d));
    chr.values.emplace_back(1);
    for (int m = 1; m < d; ++m) chr.values.push_back(RatFun::symbol(sym_x(m)));
    return chr;
}

FramingCharacter FramingCharacter::specialized(const ESolution& sol) {
    FramingCharacter chr{sol.d, false, {}};
    chr.values.reserve(static_cast<std::size_t>(sol.d));
    for (const Cyclotomic& v : sol.x) chr.values.emplace_back(v);
    return chr;
}

Bindings FramingCharacter::bindings() const {
    Bindings out;
    for (int m = 1; m < d; ++m) out.emplace(sym_x(m), values[static_cast<std::size_t>(m)]);
    return out;
}

namespace {

// Splits one level-m term t^f g_w into the lower-algebra pieces used by both
// the trace and phi: either w fixes strand m (tail == 0) and the term is
// (t^{f'} g_{w'}) t_m^{f_m}, or g_w = g_v g_{m-1}(g_{m-2}...g_i) and moving
// t_m^{f_m} right across the tail turns the term into x g_{m-1} y with
// x = t^{f'} g_v and y = (g_{m-2}...g_i) t_i^{f_m}, both one strand down.
struct LevelSplit {
    int tail;      // 0, or the tail start index i
    int top_exp;   // f_m
    YElement x;    // lower-algebra left factor, carrying the coefficient
    YElement y;    // lower-algebra right factor (tail case only)
};

LevelSplit split_top(const FramingVector& f, const Permutation& w, const RatFun& c, int d) {
    int m = w.size();
    TopDecomposition top = top_decompose(w);
    FramingVector front;
    front.k.assign(f.k.begin(), f.k.end() - 1);
    LevelSplit out{top.tail, f.k.back(), YElement(m - 1, d), YElement(m - 1, d)};
    out.x.add_term(front, top.v.restricted(), c);
    if (top.tail != 0) {
        std::vector<int> tail_word;
        for (int j = m - 2; j >= top.tail; --j) tail_word.push_back(j);
        FramingVector delta = zero_framing(m - 1);
        delta.k[static_cast<std::size_t>(top.tail - 1)] = out.top_exp;
        out.y.add_term(push_left(delta, tail_word),
                       Permutation::from_word(m - 1, tail_word), RatFun(1));
    }
    return out;
}

}  // namespace

RatFun juyumaya_trace(const YElement& y, const FramingCharacter& chr, const RatFun& z) {
    if (chr.d != y.d()) throw DomainError("character d mismatch");
    YElement cur = y;
    while (cur.n() > 1) {
        YElement lower(cur.n() - 1, cur.d());
        for (const auto& [key, c] : cur.terms()) {
            LevelSplit split = split_top(key.first, key.second, c, cur.d());
            if (split.tail == 0) {
                lower = lower + split.x.scaled(chr(split.top_exp));
            } else {
                lower = lower + y_mul(split.x, split.y).scaled(z);
            }
        }
        cur = lower;
    }
    RatFun out(0);
    for (const auto& [key, c] : cur.terms()) out += c * chr(key.first.k[0]);
    return out;
}

YElement phi_map(const YElement& y, const FramingCharacter& chr) {
    if (chr.is_symbolic) throw DomainError("phi needs a specialized character");
    if (chr.d != y.d()) throw DomainError("character d mismatch");
    int n = y.n(), d = y.d();
    if (n == 1) {
        RatFun total(0);
        for (const auto& [key, c] : y.terms()) total += c * chr(key.first.k[0]);
        return YElement::unit(1, d).scaled(total);
    }
    YElement lower_fixed(n - 1, d);
    YElement lower_tail(n - 1, d);
    for (const auto& [key, c] : y.terms()) {
        LevelSplit split = split_top(key.first, key.second, c, d);
        if (split.tail == 0) {
            lower_fixed = lower_fixed + split.x.scaled(chr(split.top_exp));
        } else {
            lower_tail = lower_tail + y_mul(split.x, split.y);
        }
    }
    YElement out = y_embedded(phi_map(lower_fixed, chr), n);
    YElement tail_part = y_embedded(phi_map(lower_tail, chr), n);
    return out + y_mul(YElement::generator(n, d, n - 1), tail_part);
}

HElement gamma_map(const YElement& y, const ESolution& sol) {
    if (sol.subset.size() != 1)
        throw DomainError("gamma is only defined for singleton subsets");
    if (sol.d != y.d()) throw DomainError("solution d mismatch");
    HElement out(y.n());
    for (const auto& [key, c] : y.terms()) {
        Cyclotomic factor(1);
        for (int exp : key.first.k) factor = factor * sol.x[static_cast<std::size_t>(exp)];
        out.add_term(key.second, c * RatFun(factor));
    }
    return out;
}

}  // namespace yh
