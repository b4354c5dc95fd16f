#include "yh/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace yh {

std::string symbol_name(int s) {
    switch (s) {
        case SYM_U: return "u";
        case SYM_Z: return "z";
        case SYM_Q: return "q";
        case SYM_ZETA: return "zeta";
        case SYM_E: return "E";
        default: break;
    }
    if (s > SYM_E && s < MAX_SYMBOLS) return "x" + std::to_string(s - SYM_E);
    throw DomainError("bad symbol index " + std::to_string(s));
}

int symbol_index(const std::string& name) {
    if (name == "u") return SYM_U;
    if (name == "z") return SYM_Z;
    if (name == "q") return SYM_Q;
    if (name == "zeta") return SYM_ZETA;
    if (name == "E") return SYM_E;
    if (name.size() > 1 && name[0] == 'x') {
        int m = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return -1;
            m = m * 10 + (name[i] - '0');
        }
        if (m >= 1 && sym_x(m) < MAX_SYMBOLS) return sym_x(m);
    }
    return -1;
}

LaurentPoly LaurentPoly::constant(Cyclotomic c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(ExpVec{}, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::symbol(int s, int exp) {
    if (s < 0 || s >= MAX_SYMBOLS) throw DomainError("bad symbol index");
    LaurentPoly p;
    if (exp == 0) return one();
    ExpVec e;
    e.e[static_cast<std::size_t>(s)] = static_cast<std::int16_t>(exp);
    p.terms_.emplace(e, Cyclotomic(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(const ExpVec& e, Cyclotomic c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

const Cyclotomic& LaurentPoly::constant_value() const {
    static const Cyclotomic kZero(0);
    if (terms_.empty()) return kZero;
    if (!is_constant()) throw DomainError("not a constant polynomial");
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Cyclotomic& c) const {
    LaurentPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
    return out;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& delta) const {
    LaurentPoly out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e + delta, coeff);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned m) const {
    LaurentPoly out = one();
    for (unsigned i = 0; i < m; ++i) out = out * *this;
    return out;
}

ExpVec LaurentPoly::min_exponents() const {
    ExpVec out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            out = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] = std::min(out.e[i], e.e[i]);
        }
    }
    return out;
}

const Cyclotomic& LaurentPoly::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero");
    return terms_.rbegin()->second;
}

std::string LaurentPoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Largest monomial first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const ExpVec& e = it->first;
        Cyclotomic c = it->second;
        std::string sign;
        if (c.is_rational() && c.rational_value() < 0) {
            sign = "-";
            c = -c;
        }
        if (first) {
            out << sign;
        } else {
            out << (sign.empty() ? " + " : " - ");
        }
        first = false;

        std::string mono;
        for (std::size_t s = 0; s < e.e.size(); ++s) {
            if (e.e[s] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += symbol_name(static_cast<int>(s));
            if (e.e[s] != 1) mono += "^" + std::to_string(e.e[s]);
        }
        bool unit = c.is_rational() && c.rational_value() == 1;
        if (mono.empty()) {
            if (c.is_rational())
                out << c.render();
            else
                out << "(" << c.render() << ")";
        } else if (unit) {
            out << mono;
        } else if (c.is_rational()) {
            out << c.render() << "*" << mono;
        } else {
            out << "(" << c.render() << ")*" << mono;
        }
    }
    return out.str();
}

}  // namespace yh
