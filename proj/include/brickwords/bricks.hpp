#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brickwords/morphism.hpp"

namespace brickwords {

/// Simultaneous-coding symbol: aligned letter blocks of the two fixed points
/// plus the signed column shift of the row-1 image against the row-0 image.
///
/// For order h > 1 the rows are h-blocks; consecutive bricks of a coding
/// overlap by h - 1 letters and only the first letter of each row is imaged.
struct Brick {
  Word row0;
  Word row1;
  std::int64_t offset = 0;

  std::size_t order() const noexcept { return row0.size(); }
  Letter head0() const { return row0.front(); }
  Letter head1() const { return row1.front(); }
  Letter head(int row) const { return row == 0 ? head0() : head1(); }
  const Word& row(int r) const { return r == 0 ? row0 : row1; }

  friend auto operator<=>(const Brick&, const Brick&) = default;
};

/// "(a,c,0)" or "(aa,cb,-1)"; `alphabet` names the letters.
std::string format_brick(const Brick& brick, const Alphabet& alphabet);

/// The offset the brick following `b` must carry to join with it:
/// s + |phi1(head1)| - |phi0(head0)|.
std::int64_t next_offset(const Brick& b, const Morphism& phi0, const Morphism& phi1);

/// |phi0(v0)| - s - |phi1(v1)| + t == 0, measured on the first letters. For
/// order h > 1 the rows of `next` must also continue those of `b` (overlap of
/// h - 1 letters); a mismatch returns false. Throws DomainError when the two
/// bricks have different orders.
bool joins_with(const Brick& b, const Brick& next, const Morphism& phi0, const Morphism& phi1);

struct CodingOptions {
  std::size_t length = 10'000;  // number of bricks to generate
  std::size_t order = 1;
  std::int64_t offset_bound = 64;
};

/// Brick coding of the fixed points u0 (of phi0 from seed0) and u1 (of phi1
/// from seed1). Bricks are numbered by first occurrence in the index word.
struct SimultaneousCoding {
  Morphism phi0;
  Morphism phi1;
  Letter seed0 = 0;
  Letter seed1 = 0;
  std::size_t order = 1;

  std::vector<Brick> bricks;  // pi: index letter -> brick
  Alphabet index_alphabet;    // {0, ..., |bricks| - 1}
  Word index_word;            // w

  std::int64_t min_offset = 0;
  std::int64_t max_offset = 0;
  std::size_t last_discovery = 0;  // position of the last newly seen brick

  const Brick& brick(Letter index) const { return bricks.at(index); }
  std::int64_t max_abs_offset() const noexcept { return std::max(-min_offset, max_offset); }
};

/// Throws DomainError for non-prolongable seeds or mismatched alphabets and
/// OffsetBoundExceeded when some |t_i| exceeds options.offset_bound.
SimultaneousCoding simultaneous_coding(const Morphism& phi0, const Morphism& phi1, Letter seed0, Letter seed1,
                                       const CodingOptions& options);

/// Row-j projection of a brick sequence. For order 1 this is the row letters;
/// for higher orders the first letter of each block plus the tail of the last.
Word tau(std::span<const Brick> bricks, int row);
Word tau(const SimultaneousCoding& coding, int row);

/// Brick sequence pi(word).
std::vector<Brick> bricks_of(const SimultaneousCoding& coding, std::span<const Letter> word);

/// Projection used in the correction-map identities: one letter per brick,
/// the first letter of row `row`. A morphism from the index alphabet to A.
Word head_projection(const SimultaneousCoding& coding, std::span<const Letter> word, int row);

/// Two-line text view of consecutive bricks. Row 0 is phi0 of each brick's
/// first row-0 letter; row 1 is phi1 of the first row-1 letter shifted by
/// the brick offset. Every letter column is one character wide (padded to
/// the longest token) followed by one separator slot; '|' marks brick
/// boundaries and columns left of the earliest row start are blank. Lines
/// are right-trimmed and newline-terminated. Throws DomainError when two
/// consecutive bricks do not join.
std::string render_diagram(std::span<const Brick> bricks, const Morphism& phi0, const Morphism& phi1);

/// Same layout, each brick drawn on its own and separated by blank columns,
/// for showing pairs that do not join.
std::string render_separately(std::span<const Brick> bricks, const Morphism& phi0, const Morphism& phi1);

}  // namespace brickwords
