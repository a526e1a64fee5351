#pragma once

#include <utility>
#include <vector>

#include "braidlie/alphabet.hpp"

namespace braidlie {

// True iff w is nonempty and strictly smaller than each of its proper
// suffixes (equivalently, strictly smaller than all proper rotations).
bool is_lyndon(const Word& w);

// All Lyndon words of length <= deg_max over k letters, sorted by
// (length, lex). Duval's generation order is pure lex, so the result is
// re-sorted by length with lex order kept inside each length.
std::vector<Word> lyndon_words(int num_letters, int deg_max);

// Same, validating the alphabet; throws "empty alphabet" when it has no
// symbols and requires deg_max >= 1.
std::vector<Word> lyndon_words(const Alphabet& alphabet, int deg_max);

// Right standard factorization w = uv where v is the longest proper Lyndon
// suffix of w; u is then Lyndon as well. Requires |w| >= 2 and w Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);

}  // namespace braidlie
