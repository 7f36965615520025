#pragma once

#include <span>
#include <vector>

#include "brickwords/alphabet.hpp"

namespace brickwords {

/// Distinct return words to `factor` in `u`, in first-occurrence order. A
/// return word starts at an occurrence and stops just before the next one.
/// Throws DomainError when the factor is empty or occurs fewer than twice.
std::vector<Word> return_words(std::span<const Letter> u, std::span<const Letter> factor);

/// Coding of the completed returns of `u` to `factor` by return-word index.
struct DerivedSequence {
  std::vector<Word> return_words;  // index -> return word
  Alphabet alphabet;               // {0, ..., |return_words| - 1}
  Word coding;
};

DerivedSequence derived_coding(std::span<const Letter> u, std::span<const Letter> factor);

}  // namespace brickwords
