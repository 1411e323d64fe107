#pragma once

#include <vector>

#include "lorenz/word.hpp"

namespace lorenz {

// Exactly one canonical representative per primitive binary necklace with
// both letters, lengths 2..max_len, ordered by length then lexicographically.
// The canonical least rotation of a primitive necklace is its Lyndon word,
// so this enumerates Lyndon words. Words with trip number 1 (all unknots)
// appear only when include_t1 is set. Bounds outside 2..64 throw
// BoundTooLarge.
std::vector<LorenzWord> enumerate_words(int max_len, bool include_t1);

}  // namespace lorenz
