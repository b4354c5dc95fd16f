#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace yh {

// Fixed symbol registry. Slots 0..4 are the named parameters in their
// canonical order; slot 4 + m is the framing-trace symbol x_m.
enum ParamSymbol : int {
    SYM_U = 0,
    SYM_Z = 1,
    SYM_Q = 2,
    SYM_ZETA = 3,
    SYM_E = 4,
};

constexpr int MAX_SYMBOLS = 21;  // u, z, q, zeta, E, x_1 .. x_16

constexpr int sym_x(int m) { return SYM_E + m; }

std::string symbol_name(int s);
int symbol_index(const std::string& name);  // -1 if unknown

// Exponent vector of a monomial; entries may be negative.
struct ExpVec {
    std::array<std::int16_t, MAX_SYMBOLS> e{};

    int total_degree() const {
        int sum = 0;
        for (int x : e) sum += x;
        return sum;
    }
    bool is_zero() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    ExpVec operator+(const ExpVec& o) const {
        ExpVec out;
        for (std::size_t i = 0; i < e.size(); ++i)
            out.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
        return out;
    }
    ExpVec operator-() const {
        ExpVec out;
        for (std::size_t i = 0; i < e.size(); ++i) out.e[i] = static_cast<std::int16_t>(-e[i]);
        return out;
    }
    bool operator==(const ExpVec& o) const { return e == o.e; }
};

// Graded lexicographic order: total degree first, then the fixed symbol order.
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

}  // namespace yh
