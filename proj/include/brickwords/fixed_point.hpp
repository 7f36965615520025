#pragma once

#include <cstddef>

#include "brickwords/morphism.hpp"

namespace brickwords {

/// Streams the one-sided fixed point of `m` starting at a prolongable seed.
///
/// Letters are produced by expanding the leftmost unexpanded letter of the
/// already generated prefix, so reading n letters keeps O(n) letters in
/// memory and never re-applies the morphism to the whole prefix.
class FixedPointStream {
 public:
  /// Throws DomainError if `seed` is not prolongable for `m`.
  FixedPointStream(Morphism m, Letter seed);

  Letter next();

  /// Ensures at least n letters are generated and returns them all.
  const Word& prefix(std::size_t n);

  std::size_t emitted() const noexcept { return emitted_; }
  const Morphism& morphism() const noexcept { return morphism_; }

 private:
  void grow_to(std::size_t n);

  Morphism morphism_;
  Word buffer_;
  std::size_t expanded_ = 1;  // buffer_[0] is expanded into the seed image
  std::size_t emitted_ = 0;
};

/// First n letters of the fixed point of m starting with `seed`.
Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t n);

}  // namespace brickwords
