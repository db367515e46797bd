#pragma once

#include <string>
#include <vector>

#include "padiccf/numbers.hpp"
#include "padiccf/surd.hpp"

namespace padiccf {

// "n/d" or "n", optional leading '-'.
Rat parse_rational(const std::string& text);

// "(a + b*sqrt(D))" / "(a - b*sqrt(D))" with rational a, b; also accepts a
// bare rational. The branch is supplied separately.
SurdElement parse_surd(const std::string& text, HenselBranch branch = HenselBranch::PlusRoot);

// "+" / "-"
HenselBranch parse_branch(const std::string& text);

// Comma-separated integer coefficients, leading (monic "1") to constant,
// e.g. "1,0,-6".
std::vector<Int> parse_coefficients(const std::string& text);

// UTF-8 text, one partial quotient per line in rational format; '#' starts a
// comment, blank lines are ignored.
std::vector<Rat> read_sequence_file(const std::string& path);
std::vector<Rat> parse_sequence(const std::string& text);

}  // namespace padiccf
