#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace yh {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den >= 1,
// which is exactly the invariant we need; we only add parsing and rendering.
using Rational = mpq_class;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), pos(position) {}
    std::size_t pos;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a" or "a/b" with optional leading '-'.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational", 0);
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    for (std::size_t j = i; j < text.size(); ++j) {
        char ch = text[j];
        if (ch == '/' && !seen_slash && j > i && j + 1 < text.size()) {
            seen_slash = true;
        } else if (ch < '0' || ch > '9') {
            throw ParseError("bad rational '" + text + "'", j);
        }
    }
    Rational r(text);
    if (r.get_den() == 0) throw DomainError("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string render(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace yh
