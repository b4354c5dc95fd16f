#pragma once

#include <string>
#include <vector>

#include "yh/braid.hpp"

namespace yh {

// Fixed braid corpus: every positive 3-strand word of length at most 5, a few
// named closures (Hopf link, trefoil, figure eight, the 3-strand showcase
// braid), and twelve mixed-sign words drawn from a fixed seed. At most four
// strands, length at most eight throughout.
std::vector<BraidWord> builtin_corpus();

// One braid per line, "#" starts a comment, blank lines are skipped, and an
// optional "n=<k>;" prefix pins the strand count.
std::vector<BraidWord> load_corpus(const std::string& path);

// Renders in the file format above, always with the "n=<k>;" prefix.
std::string render_corpus(const std::vector<BraidWord>& corpus);

}  // namespace yh
