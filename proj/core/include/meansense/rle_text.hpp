#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "meansense/word.hpp"

namespace meansense {

/// One-line RLE text form: `alphabet=<k>;` followed by ` symbol:count`
/// pairs, e.g. `alphabet=2; 1:3 0:21 1:3`. The empty word is `alphabet=2;`.
std::string to_rle_text(const Word& w);

/// Strict inverse of to_rle_text: rejects zero counts, adjacent runs with a
/// shared symbol, and any spacing other than the emitted one, so that
/// parse/emit round-trips are byte-exact.
Word parse_rle_text(std::string_view line);

/// Reads one word per non-empty line.
std::vector<Word> parse_rle_lines(std::string_view text);

}  // namespace meansense
