#include "yh/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace yh {

namespace {

void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    qpoly_trim(out);
    return out;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly out = a;
    if (b.size() > out.size()) out.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    qpoly_trim(out);
    return out;
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    rem = a;
    qpoly_trim(rem);
    quot.assign(rem.size() > b.size() ? rem.size() - b.size() + 1 : 1, Rational(0));
    const Rational& lead = b.back();
    while (rem.size() >= b.size() && !rem.empty()) {
        Rational f = rem.back() / lead;
        std::size_t shift = rem.size() - b.size();
        quot[shift] += f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        qpoly_trim(rem);
    }
    qpoly_trim(quot);
}

const QPoly& cyclotomic_polynomial(int d) {
    if (d < 1) throw DomainError("cyclotomic_polynomial needs d >= 1");
    static std::map<int, QPoly> memo;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    // Fill divisors of d bottom-up: Phi_m = (x^m - 1) / prod_{e|m, e<m} Phi_e,
    // and every proper divisor of m | d is itself a divisor of d.
    for (int m = 1; m <= d; ++m) {
        if (d % m != 0 || memo.count(m)) continue;
        QPoly num(static_cast<std::size_t>(m) + 1, Rational(0));
        num[0] = -1;
        num[static_cast<std::size_t>(m)] = 1;
        QPoly den{Rational(1)};
        for (int e = 1; e < m; ++e)
            if (m % e == 0) den = qpoly_mul(den, memo.at(e));
        QPoly quot, rem;
        qpoly_divmod(num, den, quot, rem);
        if (!rem.empty()) throw DomainError("cyclotomic recursion left a remainder");
        memo.emplace(m, std::move(quot));
    }
    return memo.at(d);
}

void Cyclotomic::normalize() {
    if (d_ == 1) {
        if (c_.size() != 1) c_.resize(1, Rational(0));
        return;
    }
    bool rational_only = true;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) {
            rational_only = false;
            break;
        }
    }
    if (rational_only) {
        Rational v = c_.empty() ? Rational(0) : c_[0];
        d_ = 1;
        c_.assign(1, v);
    }
}

Cyclotomic Cyclotomic::from_coeffs(int d, std::vector<Rational> coeffs) {
    std::size_t deg = cyclotomic_polynomial(d).size() - 1;
    if (coeffs.size() != deg) throw DomainError("cyclotomic coefficient length mismatch");
    Cyclotomic out(d, std::move(coeffs));
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::zeta(int d, long power) {
    const QPoly& phi = cyclotomic_polynomial(d);
    std::size_t deg = phi.size() - 1;
    long e = power % d;
    if (e < 0) e += d;
    // Residue of x^e modulo Phi_d.
    QPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    QPoly quot, rem;
    qpoly_divmod(p, phi, quot, rem);
    rem.resize(deg, Rational(0));
    Cyclotomic out(d, std::move(rem));
    out.normalize();
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

const Rational& Cyclotomic::rational_value() const {
    if (d_ != 1) throw DomainError("not a rational value");
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(int d) const {
    if (d_ == d) return *this;
    if (d_ != 1) throw DomainError("mixing cyclotomic conductors");
    std::size_t deg = cyclotomic_polynomial(d).size() - 1;
    std::vector<Rational> c(deg, Rational(0));
    c[0] = c_[0];
    return Cyclotomic(d, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    int d = d_ == 1 ? o.d_ : d_;
    Cyclotomic a = promoted(d), b = o.promoted(d);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.normalize();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int d = d_ == 1 ? o.d_ : d_;
    Cyclotomic a = promoted(d), b = o.promoted(d);
    if (d == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
    const QPoly& phi = cyclotomic_polynomial(d);
    QPoly prod = qpoly_mul(a.c_, b.c_);
    QPoly quot, rem;
    qpoly_divmod(prod, phi, quot, rem);
    rem.resize(phi.size() - 1, Rational(0));
    Cyclotomic out(d, std::move(rem));
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DomainError("cyclotomic inverse of zero");
    if (d_ == 1) return Cyclotomic(Rational(1) / c_[0]);
    // Extended Euclid: s*a + t*Phi_d = g with g a nonzero constant.
    QPoly r0 = c_;
    qpoly_trim(r0);
    QPoly r1 = cyclotomic_polynomial(d_);
    QPoly s0{Rational(1)}, s1{};
    while (!r1.empty()) {
        QPoly quot, rem;
        qpoly_divmod(r0, r1, quot, rem);
        QPoly s2 = qpoly_sub(s0, qpoly_mul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw DomainError("gcd with Phi_d not constant");
    Rational g = r0[0];
    std::size_t deg = cyclotomic_polynomial(d_).size() - 1;
    s0.resize(deg, Rational(0));
    for (auto& x : s0) x /= g;
    Cyclotomic out(d_, std::move(s0));
    out.normalize();
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (d_ == o.d_) return c_ == o.c_;
    // Conductors differ; equal only if both rational, and normalize() already
    // demoted rationals, so representations differ implies values differ
    // within one computation's field.
    return false;
}

std::string Cyclotomic::render() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && i > 0;
        if (!unit_coeff) out << a.get_str();
        if (i > 0) {
            if (!unit_coeff) out << "*";
            out << "zeta_" << d_;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

Cyclotomic cyc_inv(const Cyclotomic& a) { return a.inverse(); }

}  // namespace yh
