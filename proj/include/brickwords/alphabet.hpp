#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace brickwords {

/// Index of a letter inside its Alphabet.
using Letter = std::uint32_t;

/// A finite word, stored as letter indices. The owning alphabet is carried by
/// the surrounding context (a Morphism, a coding, ...).
using Word = std::vector<Letter>;

/// Ordered finite set of letter tokens. The declaration order is the Parikh
/// order and never changes after construction.
class Alphabet {
 public:
  Alphabet() = default;

  /// Throws DomainError on duplicate, empty or reserved-character tokens.
  explicit Alphabet(std::vector<std::string> tokens);

  /// {"0", "1", ..., "n-1"}.
  static Alphabet indices(std::size_t n);

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  const std::string& token(Letter letter) const;
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  std::optional<Letter> find(std::string_view token) const;

  /// Like find() but throws DomainError for unknown tokens.
  Letter at(std::string_view token) const;

  bool contains(Letter letter) const noexcept { return letter < tokens_.size(); }

  /// True when some token is longer than one character; words then print
  /// with "." separators.
  bool dotted() const noexcept { return dotted_; }

  std::string format(std::span<const Letter> word) const;
  std::string format_letter(Letter letter) const { return token(letter); }

  /// Inverse of format(): juxtaposed single-character tokens, or "."
  /// separated tokens. A dotted piece that is not itself a token is split
  /// into single-character tokens, so "0.9.10" and "04" both read correctly
  /// over {0..11}. Throws DomainError on unknown letters.
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Letter> lookup_;
  bool dotted_ = false;
};

/// Characters that may not appear inside a letter token.
bool is_reserved_token_char(char c) noexcept;

}  // namespace brickwords
