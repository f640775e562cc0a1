#pragma once

#include <random>
#include <vector>

#include "doodlekit/twin_word.hpp"

namespace doodlekit::testing {

inline TwinLetter random_letter(std::mt19937& rng, int strands) {
  std::uniform_int_distribution<int> index(1, strands - 1);
  return {rng() % 2 ? LetterKind::real : LetterKind::virt, static_cast<std::uint16_t>(index(rng))};
}

// Uniform length in [0, max_len]; strands must be at least 1.
inline TwinWord random_word(std::mt19937& rng, int strands, int max_len) {
  std::vector<TwinLetter> letters;
  if (strands >= 2) {
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int k = 0; k < len; ++k) letters.push_back(random_letter(rng, strands));
  }
  return TwinWord(strands, std::move(letters));
}

inline int random_strands(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline TwinWord word(int strands, const char* text) { return parse_word(text, strands); }

}  // namespace doodlekit::testing
