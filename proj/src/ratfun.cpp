#include "yh/ratfun.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace yh {

namespace {

// Exact division of sparse polynomials with non-negative exponents: returns
// the quotient when `den` divides `num` with zero remainder, nullopt
// otherwise. Works by cancelling leading terms under the monomial order; any
// multiple of `den` has a leading monomial divisible by the leading monomial
// of `den`, so a failed componentwise check proves indivisibility.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.is_zero()) return LaurentPoly();
    const auto dlead = den.terms().rbegin();
    const Cyclotomic dinv = dlead->second.inverse();
    LaurentPoly quot;
    LaurentPoly rem = num;
    // Exact divisions cancel one quotient term per step; cap the work spent
    // discovering that an unrelated pair does not divide.
    for (int steps = 0; steps < 4096; ++steps) {
        if (rem.is_zero()) return quot;
        const auto rlead = rem.terms().rbegin();
        ExpVec delta;
        for (std::size_t i = 0; i < delta.e.size(); ++i) {
            std::int16_t diff = static_cast<std::int16_t>(rlead->first.e[i] - dlead->first.e[i]);
            if (diff < 0) return std::nullopt;
            delta.e[i] = diff;
        }
        Cyclotomic c = rlead->second * dinv;
        quot.add_term(delta, c);
        rem = rem - den.shifted(delta).scaled(c);
    }
    return std::nullopt;
}

}  // namespace

RatFun::RatFun(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

RatFun RatFun::symbol(int s, int exp) { return RatFun(LaurentPoly::symbol(s, exp)); }

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Clear the common monomial: after this shift every exponent in num_ and
    // den_ is non-negative and at least one of them touches zero per symbol.
    ExpVec mn = num_.min_exponents();
    ExpVec md = den_.min_exponents();
    ExpVec shift;
    bool any = false;
    for (std::size_t i = 0; i < shift.e.size(); ++i) {
        std::int16_t m = std::min(mn.e[i], md.e[i]);
        if (m != 0) any = true;
        shift.e[i] = static_cast<std::int16_t>(-m);
    }
    if (any) {
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }
    if (den_.is_monomial()) {
        const auto& [e, c] = *den_.terms().begin();
        num_ = num_.shifted(-e).scaled(c.inverse());
        den_ = LaurentPoly::one();
        return;
    }
    // Cancel a denominator that divides the numerator exactly (or vice
    // versa), so that e.g. p/p collapses to 1.
    if (auto q = divide_exact(num_, den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::one();
        return;
    }
    if (!num_.is_constant()) {
        if (auto q = divide_exact(den_, num_)) {
            num_ = LaurentPoly::one();
            den_ = std::move(*q);
            if (den_.is_monomial()) {
                const auto& [e, c] = *den_.terms().begin();
                num_ = num_.shifted(-e).scaled(c.inverse());
                den_ = LaurentPoly::one();
                return;
            }
        }
    }
    const Cyclotomic& lead = den_.leading_coefficient();
    if (!(lead.is_rational() && lead.rational_value() == 1)) {
        Cyclotomic inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RatFun::is_one() const { return num_ == den_; }

Cyclotomic RatFun::constant_value() const {
    if (!is_constant()) throw DomainError("not a constant rational function");
    return num_.constant_value() * den_.constant_value().inverse();
}

RatFun RatFun::operator-() const {
    RatFun out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFun RatFun::operator+(const RatFun& o) const {
    RatFun out;
    if (den_ == o.den_) {
        out.num_ = num_ + o.num_;
        out.den_ = den_;
    } else {
        out.num_ = num_ * o.den_ + o.num_ * den_;
        out.den_ = den_ * o.den_;
    }
    if (out.den_.is_zero()) throw DomainError("rational function with zero denominator");
    out.normalize();
    return out;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    RatFun out;
    out.num_ = num_ * o.num_;
    out.den_ = den_ * o.den_;
    out.normalize();
    return out;
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::inverse() const {
    if (num_.is_zero()) throw DomainError("inverse of zero rational function");
    RatFun out;
    out.num_ = den_;
    out.den_ = num_;
    out.normalize();
    return out;
}

RatFun RatFun::pow(int m) const {
    if (m < 0) return inverse().pow(-m);
    RatFun out(1);
    for (int i = 0; i < m; ++i) out = out * *this;
    return out;
}

std::string RatFun::render() const {
    if (den_.is_constant()) {
        // Normalization leaves a constant denominator only when it is 1.
        return num_.render();
    }
    return "(" + num_.render() + ")/(" + den_.render() + ")";
}

bool ratfun_eq(const RatFun& a, const RatFun& b) {
    if (a.den() == b.den()) return a.num() == b.num();
    return a.num() * b.den() == b.num() * a.den();
}

RatFun substitute(const LaurentPoly& p, const Bindings& bindings) {
    RatFun acc(0);
    for (const auto& [e, c] : p.terms()) {
        RatFun term{Cyclotomic(c)};
        ExpVec rest;
        for (std::size_t s = 0; s < e.e.size(); ++s) {
            if (e.e[s] == 0) continue;
            auto it = bindings.find(static_cast<int>(s));
            if (it == bindings.end())
                rest.e[s] = e.e[s];
            else
                term = term * it->second.pow(e.e[s]);
        }
        if (!rest.is_zero()) term = term * RatFun(LaurentPoly::monomial(rest, Cyclotomic(1)));
        acc = acc + term;
    }
    return acc;
}

RatFun substitute(const RatFun& a, const Bindings& bindings) {
    RatFun den = substitute(a.den(), bindings);
    if (den.is_zero()) throw DomainError("substitution produced a zero denominator");
    return substitute(a.num(), bindings) / den;
}

// ---------------------------------------------------------------------------
// Expression parser for the rendered form.

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_ = {Token::End, "", i_};
            return;
        }
        char ch = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            tok_ = {Token::Number, text_.substr(i_, j - i_), i_};
            i_ = j;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, text_.substr(i_, j - i_), i_};
            i_ = j;
        } else {
            tok_ = {Token::Op, std::string(1, ch), i_};
            ++i_;
        }
    }

    const std::string& text_;
    Token tok_;
    std::size_t i_ = 0;
};

class ExprParser {
  public:
    explicit ExprParser(const std::string& text) : lex_(text) {}

    RatFun parse() {
        RatFun v = sum();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input in expression", lex_.peek().pos);
        return v;
    }

  private:
    RatFun sum() {
        bool neg = consume_sign();
        RatFun acc = product();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            bool minus = lex_.take().text == "-";
            RatFun rhs = product();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    RatFun product() {
        RatFun acc = power();
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            bool div = lex_.take().text == "/";
            RatFun rhs = power();
            acc = div ? acc / rhs : acc * rhs;
        }
        return acc;
    }

    RatFun power() {
        RatFun base = atom();
        if (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
            lex_.take();
            int sign = 1;
            if (lex_.peek().kind == Token::Op && lex_.peek().text == "-") {
                lex_.take();
                sign = -1;
            }
            Token t = lex_.take();
            if (t.kind != Token::Number) throw ParseError("expected integer exponent", t.pos);
            return base.pow(sign * std::stoi(t.text));
        }
        return base;
    }

    RatFun atom() {
        Token t = lex_.take();
        if (t.kind == Token::Number) return RatFun(Rational(t.text));
        if (t.kind == Token::Ident) {
            int s = symbol_index(t.text);
            if (s >= 0) return RatFun::symbol(s);
            if (t.text.rfind("zeta_", 0) == 0) {
                int d = std::stoi(t.text.substr(5));
                if (d >= 1) return RatFun(Cyclotomic::zeta(d));
            }
            throw ParseError("unknown symbol '" + t.text + "'", t.pos);
        }
        if (t.kind == Token::Op && t.text == "(") {
            RatFun v = sum();
            Token close = lex_.take();
            if (close.kind != Token::Op || close.text != ")")
                throw ParseError("expected ')'", close.pos);
            return v;
        }
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }

    bool consume_sign() {
        bool neg = false;
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            if (lex_.take().text == "-") neg = !neg;
        }
        return neg;
    }

    Lexer lex_;
};

}  // namespace

RatFun parse_ratfun(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace yh
