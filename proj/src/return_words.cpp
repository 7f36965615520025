#include "brickwords/return_words.hpp"

#include <algorithm>
#include <map>

#include "brickwords/error.hpp"

namespace brickwords {
namespace {

std::vector<std::size_t> occurrences(std::span<const Letter> u, std::span<const Letter> factor) {
  if (factor.empty()) throw DomainError("return words need a nonempty factor");
  std::vector<std::size_t> out;
  auto it = u.begin();
  while (true) {
    it = std::search(it, u.end(), factor.begin(), factor.end());
    if (it == u.end()) break;
    out.push_back(static_cast<std::size_t>(it - u.begin()));
    ++it;
  }
  if (out.size() < 2) throw DomainError("factor occurs fewer than twice");
  return out;
}

}  // namespace

DerivedSequence derived_coding(std::span<const Letter> u, std::span<const Letter> factor) {
  const std::vector<std::size_t> occ = occurrences(u, factor);
  DerivedSequence out;
  std::map<Word, Letter> index;
  out.coding.reserve(occ.size() - 1);
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    Word r(u.begin() + static_cast<std::ptrdiff_t>(occ[i]), u.begin() + static_cast<std::ptrdiff_t>(occ[i + 1]));
    auto [it, inserted] = index.try_emplace(r, static_cast<Letter>(out.return_words.size()));
    if (inserted) out.return_words.push_back(std::move(r));
    out.coding.push_back(it->second);
  }
  out.alphabet = Alphabet::indices(out.return_words.size());
  return out;
}

std::vector<Word> return_words(std::span<const Letter> u, std::span<const Letter> factor) {
  return derived_coding(u, factor).return_words;
}

}  // namespace brickwords
