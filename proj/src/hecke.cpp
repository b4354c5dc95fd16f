#include "yh/hecke.hpp"

namespace yh {

HElement HElement::unit(int n) {
    HElement h(n);
    h.terms_.emplace(Permutation(n), RatFun(1));
    return h;
}

HElement HElement::generator(int n, int i) {
    HElement h(n);
    h.terms_.emplace(Permutation::transposition(n, i), RatFun(1));
    return h;
}

void HElement::add_term(const Permutation& w, const RatFun& c) {
    if (w.size() != n_) throw DomainError("permutation size mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFun HElement::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RatFun(0) : it->second;
}

HElement HElement::operator+(const HElement& o) const {
    if (n_ != o.n_) throw DomainError("algebra size mismatch");
    HElement out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

HElement HElement::operator-(const HElement& o) const {
    if (n_ != o.n_) throw DomainError("algebra size mismatch");
    HElement out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
    return out;
}

HElement HElement::scaled(const RatFun& c) const {
    HElement out(n_);
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : terms_) out.add_term(w, coeff * c);
    return out;
}

bool HElement::operator==(const HElement& o) const {
    if (n_ != o.n_) return false;
    for (const auto& [w, c] : terms_)
        if (!ratfun_eq(c, o.coefficient(w))) return false;
    for (const auto& [w, c] : o.terms_)
        if (!terms_.count(w) && !c.is_zero()) return false;
    return true;
}

HElement h_mul_gen(const HElement& h, int i, int sign) {
    if (i < 1 || i >= h.n()) throw DomainError("generator index out of range");
    if (sign < 0) {
        // G_i^-1 = q^-1 G_i + (q^-1 - 1)
        RatFun qinv = RatFun::symbol(SYM_Q, -1);
        return h_mul_gen(h, i, +1).scaled(qinv) + h.scaled(qinv - 1);
    }
    RatFun q = RatFun::symbol(SYM_Q);
    HElement out(h.n());
    for (const auto& [w, c] : h.terms()) {
        if (w.right_ascent(i)) {
            out.add_term(w.right_mul_s(i), c);
        } else {
            out.add_term(w.right_mul_s(i), c * q);
            out.add_term(w, c * (q - 1));
        }
    }
    return out;
}

HElement h_mul(const HElement& a, const HElement& b) {
    if (a.n() != b.n()) throw DomainError("algebra size mismatch");
    HElement out(a.n());
    for (const auto& [w, c] : b.terms()) {
        HElement cur = a;
        for (int letter : w.reduced_word()) cur = h_mul_gen(cur, letter, +1);
        out = out + cur.scaled(c);
    }
    return out;
}

HElement h_from_braid(const BraidWord& alpha) {
    HElement h = HElement::unit(alpha.n);
    for (int letter : alpha.letters) h = h_mul_gen(h, std::abs(letter), letter > 0 ? +1 : -1);
    return h;
}

HElement h_power(int i, int m, int n) {
    if (m < 0) throw DomainError("h_power needs m >= 0");
    RatFun q = RatFun::symbol(SYM_Q);
    RatFun qm = q.pow(m);
    HElement out(n);
    if (m % 2 == 0) {
        RatFun c = (qm - 1) / (q + 1);
        out = HElement::generator(n, i).scaled(c) + HElement::unit(n).scaled(c + 1);
    } else {
        RatFun c = (qm + 1) / (q + 1);
        out = HElement::generator(n, i).scaled(c) + HElement::unit(n).scaled(c - 1);
    }
    return out;
}

HElement h_embedded(const HElement& h, int m) {
    if (m < h.n()) throw DomainError("embedding cannot shrink the algebra");
    HElement out(m);
    for (const auto& [w, c] : h.terms()) out.add_term(w.embedded(m), c);
    return out;
}

RatFun ocneanu_trace(const HElement& h, const RatFun& zeta) {
    HElement cur = h;
    while (cur.n() > 1) {
        int m = cur.n();
        HElement lower(m - 1);
        for (const auto& [w, c] : cur.terms()) {
            TopDecomposition top = top_decompose(w);
            if (top.tail == 0) {
                lower.add_term(top.v.restricted(), c);
                continue;
            }
            // G_w = G_v G_{m-1} (G_{m-2}...G_i), so the top strand strips to
            // zeta times G_v (G_{m-2}...G_i), evaluated one level down.
            HElement x(m - 1);
            x.add_term(top.v.restricted(), c * zeta);
            for (int j = m - 2; j >= top.tail; --j) x = h_mul_gen(x, j, +1);
            lower = lower + x;
        }
        cur = lower;
    }
    RatFun out(0);
    for (const auto& [w, c] : cur.terms()) out += c;
    return out;
}

}  // namespace yh
