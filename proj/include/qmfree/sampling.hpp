#pragma once

#include <cstdint>
#include <random>

#include "qmfree/word.hpp"

namespace qmfree {

// std::mt19937_64's output sequence is fixed by the standard; the
// distributions are not, so ranges are mapped by hand to keep runs
// reproducible across standard libraries.
inline std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

/// A reduced word with length uniform in [0, max_len] and each letter uniform
/// among the non-cancelling choices.
inline Word RandomReducedWord(int rank, int max_len, std::mt19937_64& rng) {
  const auto alphabet = Alphabet(rank);
  const auto len = UniformBelow(rng, static_cast<std::uint64_t>(max_len) + 1);
  std::vector<Letter> letters;
  letters.reserve(len);
  while (letters.size() < len) {
    const Letter x = alphabet[UniformBelow(rng, alphabet.size())];
    if (!letters.empty() && letters.back() == x.inverse()) continue;
    letters.push_back(x);
  }
  return Word(rank, letters);
}

}  // namespace qmfree
