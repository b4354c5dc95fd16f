#include "yh/corpus.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace yh {

std::vector<BraidWord> builtin_corpus() {
    std::vector<BraidWord> out;
    std::set<std::pair<int, std::vector<int>>> seen;
    auto push = [&](const BraidWord& alpha) {
        if (seen.emplace(alpha.n, alpha.letters).second) out.push_back(alpha);
    };
    // all positive 3-strand words of length <= 5
    for (int len = 0; len <= 5; ++len) {
        std::vector<int> letters(static_cast<std::size_t>(len), 1);
        for (;;) {
            push(BraidWord{3, letters});
            std::size_t i = letters.size();
            while (i > 0 && letters[i - 1] == 2) letters[--i] = 1;
            if (i == 0) break;
            ++letters[i - 1];
        }
    }
    // Hopf link, trefoil, the 3-strand showcase braid, figure eight
    push(parse_braid("1 1"));
    push(parse_braid("1 1 1"));
    push(parse_braid("1 2 2 1 2 2"));
    push(parse_braid("1 -2 1 -2"));
    // twelve mixed-sign words from a fixed seed
    std::mt19937 rng(20260815u);
    int added = 0;
    while (added < 12) {
        int n = 2 + static_cast<int>(rng() % 3u);
        int len = 4 + static_cast<int>(rng() % 5u);
        std::vector<int> letters;
        letters.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            letters.push_back(rng() % 2u == 0 ? g : -g);
        }
        BraidWord alpha{n, letters};
        if (seen.emplace(alpha.n, alpha.letters).second) {
            out.push_back(alpha);
            ++added;
        }
    }
    return out;
}

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<BraidWord> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open corpus file '" + path + "'");
    std::vector<BraidWord> out;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;
        try {
            if (line.rfind("n=", 0) == 0) {
                std::size_t semi = line.find(';');
                if (semi == std::string::npos)
                    throw ParseError("expected ';' after the strand count", 0);
                std::string count = line.substr(2, semi - 2);
                std::size_t parsed = 0;
                int n = 0;
                try {
                    n = std::stoi(count, &parsed);
                } catch (const std::exception&) {
                    throw ParseError("bad strand count '" + count + "'", 2);
                }
                if (parsed != count.size())
                    throw ParseError("bad strand count '" + count + "'", 2);
                out.push_back(parse_braid(line.substr(semi + 1), n));
            } else {
                out.push_back(parse_braid(line));
            }
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.pos);
        } catch (const DomainError& e) {
            throw DomainError("line " + std::to_string(lineno) + ": " + std::string(e.what()));
        }
    }
    return out;
}

std::string render_corpus(const std::vector<BraidWord>& corpus) {
    std::ostringstream out;
    for (const BraidWord& alpha : corpus) {
        out << "n=" << alpha.n << ";";
        std::string word = render_braid(alpha);
        if (!word.empty()) out << " " << word;
        out << "\n";
    }
    return out.str();
}

}  // namespace yh
