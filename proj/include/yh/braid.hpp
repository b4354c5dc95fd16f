#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yh/symgroup.hpp"

namespace yh {

// Braid word on n strands: letter i > 0 is sigma_i, i < 0 is sigma_{|i|}^-1.
struct BraidWord {
    int n = 1;
    std::vector<int> letters;
};

// Whitespace-separated signed integers. Without an explicit strand count the
// word determines it as 1 + max|letter| (1 for the empty word).
BraidWord parse_braid(const std::string& text, std::optional<int> n = std::nullopt);
std::string render_braid(const BraidWord& alpha);

int epsilon(const BraidWord& alpha);              // sum of exponents
int nu(const BraidWord& alpha);                   // |sum of negative exponents|
int epsilon_k(const BraidWord& alpha, int k);     // exponent sum of sigma_k
bool is_positive(const BraidWord& alpha);

BraidWord markov_conjugate(const BraidWord& alpha, const BraidWord& beta);  // beta alpha beta^-1
BraidWord markov_stabilize(const BraidWord& alpha, int sign);               // alpha sigma_n^{+-1}

Permutation braid_permutation(const BraidWord& alpha);
int closure_components(const BraidWord& alpha);

// Constructive form of sigma_n alpha sigma_n for positive alpha in B_n^+:
// either alpha_1 sigma_n alpha_2 with both parts in B_n^+ (split == true),
// or beta_1 sigma_j^2 beta_2 with both parts in B_{n+1}^+.
struct PsalidiResult {
    bool split;
    BraidWord left;
    BraidWord right;
    int j = 0;  // set when split == false

    // The asserted word sigma_n alpha sigma_n, reassembled in B_{n+1}.
    BraidWord reassembled(int n) const;
};
PsalidiResult psalidi_rewrite(const BraidWord& alpha);

}  // namespace yh
