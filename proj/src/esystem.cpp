#include "yh/esystem.hpp"

#include <algorithm>

namespace yh {

namespace {

Cyclotomic power_sum(const std::vector<Cyclotomic>& x, int d) {
    Cyclotomic total(0);
    for (int s = 0; s < d; ++s) total = total + x[static_cast<std::size_t>(s)] *
                                                x[static_cast<std::size_t>((d - s) % d)];
    return total;
}

}  // namespace

ESolution solve(int d, std::vector<int> subset) {
    if (d < 1) throw DomainError("solve needs d >= 1");
    if (subset.empty()) throw DomainError("the subset must be non-empty");
    std::sort(subset.begin(), subset.end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= d) throw DomainError("subset entry out of range");
        if (i > 0 && subset[i] == subset[i - 1]) throw DomainError("duplicate subset entry");
    }
    Rational inv_size(1, static_cast<long>(subset.size()));
    std::vector<Cyclotomic> x;
    x.reserve(static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) {
        Cyclotomic sum(0);
        for (int k : subset) sum = sum + Cyclotomic::zeta(d, static_cast<long>(k) * m);
        x.push_back(Cyclotomic(inv_size) * sum);
    }
    if (!verify(x, d)) throw DomainError("candidate solution fails the E-system equations");
    return ESolution{d, std::move(subset), std::move(x)};
}

bool verify(const std::vector<Cyclotomic>& x, int d) {
    if (d < 1 || x.size() != static_cast<std::size_t>(d)) return false;
    if (x[0] != Cyclotomic(1)) return false;
    Cyclotomic total = power_sum(x, d);
    for (int m = 1; m < d; ++m) {
        Cyclotomic lhs(0);
        for (int s = 0; s < d; ++s)
            lhs = lhs + x[static_cast<std::size_t>((m + s) % d)] *
                        x[static_cast<std::size_t>((d - s) % d)];
        if (lhs != x[static_cast<std::size_t>(m)] * total) return false;
    }
    return true;
}

Rational e_value(const ESolution& sol) {
    Rational value(1, static_cast<long>(sol.subset.size()));
    Cyclotomic check = Cyclotomic(Rational(1, sol.d)) * power_sum(sol.x, sol.d);
    if (check != Cyclotomic(value)) throw DomainError("E-value cross-check failed");
    return value;
}

std::vector<int> parse_subset(const std::string& text, int d) {
    if (d < 1) throw DomainError("subset parsing needs d >= 1");
    std::vector<int> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t comma = text.find(',', i);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(i, comma - i);
        if (token.empty()) throw ParseError("empty subset entry", i);
        std::size_t parsed = 0;
        long value = 0;
        try {
            value = std::stol(token, &parsed);
        } catch (const std::exception&) {
            throw ParseError("bad subset entry '" + token + "'", i);
        }
        if (parsed != token.size()) throw ParseError("bad subset entry '" + token + "'", i);
        int residue = static_cast<int>(((value % d) + d) % d);
        if (std::find(out.begin(), out.end(), residue) != out.end())
            throw ParseError("duplicate subset entry '" + token + "'", i);
        out.push_back(residue);
        if (comma == text.size()) break;
        i = comma + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace yh
