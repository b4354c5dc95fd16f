#pragma once

#include <string>
#include <vector>

#include "yh/cyclotomic.hpp"

namespace yh {

// One solution of the E-system, labelled by a non-empty subset S of Z/dZ.
struct ESolution {
    int d;
    std::vector<int> subset;    // sorted distinct residues in [0, d)
    std::vector<Cyclotomic> x;  // x[m] for m in [0, d); x[0] = 1
};

// Candidate x_m = (1/|S|) sum_{k in S} zeta_d^{km}, accepted only after
// verify() confirms it solves the system.
ESolution solve(int d, std::vector<int> subset);

// Exact check of sum_s x_{m+s} x_{d-s} = x_m sum_s x_s x_{d-s} for
// 1 <= m <= d-1, indices mod d.
bool verify(const std::vector<Cyclotomic>& x, int d);

// E = 1/|S|, cross-checked against (1/d) sum_s x_s x_{d-s}.
Rational e_value(const ESolution& sol);

// Comma-separated residues, e.g. "0,2,3"; entries are reduced mod d and
// duplicates are rejected.
std::vector<int> parse_subset(const std::string& text, int d);

}  // namespace yh
