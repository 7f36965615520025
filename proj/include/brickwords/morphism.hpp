#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brickwords/alphabet.hpp"

namespace brickwords {

/// Per-letter occurrence counts, indexed in alphabet order.
struct ParikhVector {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const noexcept;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

ParikhVector parikh(std::span<const Letter> word, std::size_t alphabet_size);

/// Square nonnegative integer matrix; entry (i, j) counts letter i in the
/// image of letter j.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  explicit IncidenceMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}
  static IncidenceMatrix identity(std::size_t dim);
  static IncidenceMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  std::vector<std::vector<std::uint64_t>> rows() const;

  IncidenceMatrix operator*(const IncidenceMatrix& rhs) const;
  ParikhVector operator*(const ParikhVector& v) const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> entries_;
};

IncidenceMatrix matrix_power(const IncidenceMatrix& m, unsigned k);

/// Primitivity via Wielandt's bound: some power k <= (d-1)^2 + 1 is
/// entrywise positive. Works on the zero pattern, so it never overflows.
bool is_primitive(const IncidenceMatrix& m);

/// Non-erasing morphism from `source` letters to words over `target`.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  /// Endomorphism (substitution) on `alphabet`.
  static Morphism endo(Alphabet alphabet, std::vector<Word> images);
  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  bool is_endomorphism() const noexcept { return source_ == target_; }

  const Word& image(Letter letter) const;
  std::size_t image_length(Letter letter) const { return image(letter).size(); }
  const std::vector<Word>& images() const noexcept { return images_; }
  std::size_t max_image_length() const noexcept;

  Word apply(std::span<const Letter> word) const;
  std::size_t image_length(std::span<const Letter> word) const;

  /// "a->abc;b->a;c->ac". Dotted words when any target token is multi-character.
  std::string to_spec() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

/// outer ∘ inner: apply `inner` first.
Morphism compose(const Morphism& outer, const Morphism& inner);

/// k-fold composition of an endomorphism, k >= 1.
Morphism power(const Morphism& m, unsigned k);

IncidenceMatrix incidence_matrix(const Morphism& m);

/// Letters x with m(x) starting with x and |m(x)| >= 2, in alphabet order.
std::vector<Letter> prolongable_seeds(const Morphism& m);

bool is_prolongable(const Morphism& m, Letter seed);

}  // namespace brickwords
