// Writes the built-in braid corpus in the corpus file format, so the checked-in
// data file can be regenerated exactly.
#include <fstream>
#include <iostream>
#include <string>

#include "yh/corpus.hpp"

int main(int argc, char** argv) {
    std::string out_path;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--out" && i + 1 < argc) {
            out_path = argv[++i];
        } else {
            std::cerr << "usage: gen_corpus [--out FILE]\n";
            return 2;
        }
    }
    std::string text = yh::render_corpus(yh::builtin_corpus());
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open '" << out_path << "'\n";
        return 1;
    }
    out << text;
    return 0;
}
