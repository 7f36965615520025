#include "brickwords/bricks.hpp"

#include <cstdlib>
#include <map>

#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"

namespace brickwords {

std::string format_brick(const Brick& brick, const Alphabet& alphabet) {
  return "(" + alphabet.format(brick.row0) + "," + alphabet.format(brick.row1) + "," +
         std::to_string(brick.offset) + ")";
}

std::int64_t next_offset(const Brick& b, const Morphism& phi0, const Morphism& phi1) {
  return b.offset + static_cast<std::int64_t>(phi1.image_length(b.head1())) -
         static_cast<std::int64_t>(phi0.image_length(b.head0()));
}

bool joins_with(const Brick& b, const Brick& next, const Morphism& phi0, const Morphism& phi1) {
  if (b.order() != next.order() || b.row1.size() != b.order() || next.row1.size() != next.order())
    throw DomainError("joins_with() needs bricks of equal order");
  if (b.order() == 0) throw DomainError("bricks must have order >= 1");
  for (std::size_t k = 1; k < b.order(); ++k) {
    if (b.row0[k] != next.row0[k - 1] || b.row1[k] != next.row1[k - 1]) return false;
  }
  return next_offset(b, phi0, phi1) == next.offset;
}

SimultaneousCoding simultaneous_coding(const Morphism& phi0, const Morphism& phi1, Letter seed0, Letter seed1,
                                       const CodingOptions& options) {
  if (!(phi0.source() == phi1.source())) throw DomainError("morphisms are over different alphabets");
  if (options.order == 0) throw DomainError("coding order must be >= 1");
  if (options.offset_bound < 1) throw DomainError("offset bound must be >= 1");

  SimultaneousCoding coding{phi0, phi1, seed0, seed1, options.order, {}, {}, {}, 0, 0, 0};
  const std::size_t n = options.length;
  const std::size_t h = options.order;
  FixedPointStream s0(phi0, seed0);
  FixedPointStream s1(phi1, seed1);
  const Word& u0 = s0.prefix(n + h - 1);
  const Word& u1 = s1.prefix(n + h - 1);

  std::map<Brick, Letter> numbering;
  coding.index_word.reserve(n);
  std::int64_t offset = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::llabs(offset) > options.offset_bound) throw OffsetBoundExceeded(i, offset, options.offset_bound);
    Brick b{Word(u0.begin() + i, u0.begin() + i + h), Word(u1.begin() + i, u1.begin() + i + h), offset};
    coding.min_offset = std::min(coding.min_offset, offset);
    coding.max_offset = std::max(coding.max_offset, offset);
    offset = next_offset(b, phi0, phi1);
    auto [it, inserted] = numbering.try_emplace(std::move(b), static_cast<Letter>(coding.bricks.size()));
    if (inserted) {
      coding.bricks.push_back(it->first);
      coding.last_discovery = i;
    }
    coding.index_word.push_back(it->second);
  }
  coding.index_alphabet = Alphabet::indices(coding.bricks.size());
  return coding;
}

Word tau(std::span<const Brick> bricks, int row) {
  Word out;
  if (bricks.empty()) return out;
  out.reserve(bricks.size() + bricks.back().order());
  for (const Brick& b : bricks) out.push_back(b.head(row));
  const Word& last = bricks.back().row(row);
  out.insert(out.end(), last.begin() + 1, last.end());
  return out;
}

std::vector<Brick> bricks_of(const SimultaneousCoding& coding, std::span<const Letter> word) {
  std::vector<Brick> out;
  out.reserve(word.size());
  for (Letter x : word) out.push_back(coding.brick(x));
  return out;
}

Word tau(const SimultaneousCoding& coding, int row) { return tau(bricks_of(coding, coding.index_word), row); }

Word head_projection(const SimultaneousCoding& coding, std::span<const Letter> word, int row) {
  Word out;
  out.reserve(word.size());
  for (Letter x : word) out.push_back(coding.brick(x).head(row));
  return out;
}

}  // namespace brickwords
