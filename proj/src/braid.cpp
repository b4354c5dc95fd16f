#include "yh/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace yh {

BraidWord parse_braid(const std::string& text, std::optional<int> n) {
    BraidWord out;
    std::size_t i = 0;
    int max_abs = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::string token = text.substr(start, i - start);
        std::size_t parsed = 0;
        int value = 0;
        try {
            value = std::stoi(token, &parsed);
        } catch (const std::exception&) {
            throw ParseError("bad braid letter '" + token + "'", start);
        }
        if (parsed != token.size()) throw ParseError("bad braid letter '" + token + "'", start);
        if (value == 0) throw ParseError("braid letter 0 is not a generator", start);
        out.letters.push_back(value);
        max_abs = std::max(max_abs, std::abs(value));
    }
    out.n = n.value_or(max_abs + 1);
    if (out.n < 1) throw ParseError("strand count must be >= 1", 0);
    if (max_abs > out.n - 1)
        throw ParseError("letter exceeds strand count n=" + std::to_string(out.n), 0);
    return out;
}

std::string render_braid(const BraidWord& alpha) {
    std::ostringstream out;
    for (std::size_t i = 0; i < alpha.letters.size(); ++i) {
        if (i) out << ' ';
        out << alpha.letters[i];
    }
    return out.str();
}

int epsilon(const BraidWord& alpha) {
    int sum = 0;
    for (int x : alpha.letters) sum += (x > 0) ? 1 : -1;
    return sum;
}

int nu(const BraidWord& alpha) {
    int count = 0;
    for (int x : alpha.letters)
        if (x < 0) ++count;
    return count;
}

int epsilon_k(const BraidWord& alpha, int k) {
    int sum = 0;
    for (int x : alpha.letters) {
        if (x == k) ++sum;
        if (x == -k) --sum;
    }
    return sum;
}

bool is_positive(const BraidWord& alpha) { return nu(alpha) == 0; }

BraidWord markov_conjugate(const BraidWord& alpha, const BraidWord& beta) {
    BraidWord out;
    out.n = std::max(alpha.n, beta.n);
    out.letters = beta.letters;
    out.letters.insert(out.letters.end(), alpha.letters.begin(), alpha.letters.end());
    for (auto it = beta.letters.rbegin(); it != beta.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

BraidWord markov_stabilize(const BraidWord& alpha, int sign) {
    BraidWord out = alpha;
    out.n = alpha.n + 1;
    out.letters.push_back(sign >= 0 ? alpha.n : -alpha.n);
    return out;
}

Permutation braid_permutation(const BraidWord& alpha) {
    Permutation w(alpha.n);
    for (int x : alpha.letters) w = w.right_mul_s(std::abs(x));
    return w;
}

int closure_components(const BraidWord& alpha) {
    return static_cast<int>(cycle_type(braid_permutation(alpha)).parts.size());
}

BraidWord PsalidiResult::reassembled(int n) const {
    BraidWord out;
    out.n = n + 1;
    out.letters = left.letters;
    if (split) {
        out.letters.push_back(n);
    } else {
        out.letters.push_back(j);
        out.letters.push_back(j);
    }
    out.letters.insert(out.letters.end(), right.letters.begin(), right.letters.end());
    return out;
}

PsalidiResult psalidi_rewrite(const BraidWord& alpha) {
    if (!is_positive(alpha)) throw DomainError("psalidi rewriter needs a positive word");
    int n = alpha.n;
    for (int x : alpha.letters)
        if (x > n - 1) throw DomainError("letter exceeds B_n for the given n");

    std::vector<int> word = alpha.letters;
    auto make = [n](std::vector<int> letters, int strands) {
        BraidWord b;
        b.n = strands;
        b.letters = std::move(letters);
        return b;
    };

    // Case split on the number of sigma_{n-1} letters; the >= 2 case either
    // shrinks that count (recurse at the same n) or finishes, so this loop
    // terminates.
    for (;;) {
        int top = n - 1;
        std::vector<std::size_t> occ;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] == top) occ.push_back(i);

        if (occ.empty()) {
            // sigma_n commutes with the whole word: sigma_n a sigma_n = a sigma_n^2.
            return {false, make(word, n + 1), make({}, n + 1), n};
        }
        if (occ.size() == 1) {
            // a = b1 sigma_{n-1} b2 with b1, b2 in B_{n-1}^+, so
            // sigma_n a sigma_n = (b1 sigma_{n-1}) sigma_n (sigma_{n-1} b2).
            std::vector<int> left(word.begin(), word.begin() + static_cast<long>(occ[0]));
            std::vector<int> right(word.begin() + static_cast<long>(occ[0]) + 1, word.end());
            left.push_back(top);
            right.insert(right.begin(), top);
            return {true, make(std::move(left), n), make(std::move(right), n), 0};
        }

        // Split at the first two occurrences: a = a1 sigma_{n-1} b sigma_{n-1} a2,
        // and rewrite the inner sigma_{n-1} b sigma_{n-1} one strand lower.
        std::vector<int> a1(word.begin(), word.begin() + static_cast<long>(occ[0]));
        std::vector<int> b(word.begin() + static_cast<long>(occ[0]) + 1,
                           word.begin() + static_cast<long>(occ[1]));
        std::vector<int> a2(word.begin() + static_cast<long>(occ[1]) + 1, word.end());

        PsalidiResult inner = psalidi_rewrite(make(std::move(b), n - 1));
        if (inner.split) {
            // sigma_{n-1} b sigma_{n-1} = c1 sigma_{n-1} c2: substitute and retry;
            // the sigma_{n-1} count drops by one.
            std::vector<int> next = std::move(a1);
            next.insert(next.end(), inner.left.letters.begin(), inner.left.letters.end());
            next.push_back(top);
            next.insert(next.end(), inner.right.letters.begin(), inner.right.letters.end());
            next.insert(next.end(), a2.begin(), a2.end());
            word = std::move(next);
            continue;
        }
        // sigma_{n-1} b sigma_{n-1} = d1 sigma_j^2 d2 with d1, d2 in B_n^+:
        // sigma_n a sigma_n = (sigma_n a1 d1) sigma_j^2 (d2 a2 sigma_n).
        std::vector<int> left{n};
        left.insert(left.end(), a1.begin(), a1.end());
        left.insert(left.end(), inner.left.letters.begin(), inner.left.letters.end());
        std::vector<int> right = inner.right.letters;
        right.insert(right.end(), a2.begin(), a2.end());
        right.push_back(n);
        return {false, make(std::move(left), n + 1), make(std::move(right), n + 1), inner.j};
    }
}

}  // namespace yh
