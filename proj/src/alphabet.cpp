#include "brickwords/alphabet.hpp"

#include <cctype>

#include "brickwords/error.hpp"

namespace brickwords {

bool is_reserved_token_char(char c) noexcept {
  switch (c) {
    case ';':
    case '|':
    case '.':
    case '^':
    case '=':
    case ',':
    case '#':
      return true;
    default:
      return std::isspace(static_cast<unsigned char>(c)) != 0;
  }
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  lookup_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& t = tokens_[i];
    if (t.empty()) throw DomainError("empty letter token");
    for (char c : t) {
      if (is_reserved_token_char(c)) throw DomainError("letter token '" + t + "' contains a reserved character");
    }
    if (t.find("->") != std::string::npos) throw DomainError("letter token '" + t + "' contains '->'");
    if (!lookup_.emplace(t, static_cast<Letter>(i)).second) throw DomainError("duplicate letter '" + t + "'");
    if (t.size() > 1) dotted_ = true;
  }
}

Alphabet Alphabet::indices(std::size_t n) {
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(std::to_string(i));
  return Alphabet(std::move(tokens));
}

const std::string& Alphabet::token(Letter letter) const {
  if (letter >= tokens_.size()) throw DomainError("letter index " + std::to_string(letter) + " out of range");
  return tokens_[letter];
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = lookup_.find(std::string(token));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view token) const {
  if (auto l = find(token)) return *l;
  throw DomainError("unknown letter '" + std::string(token) + "'");
}

std::string Alphabet::format(std::span<const Letter> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (dotted_ && i > 0) out.push_back('.');
    out += token(word[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  auto single_chars = [&](std::string_view piece) {
    for (char c : piece) out.push_back(at(std::string_view(&c, 1)));
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string_view piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (piece.empty()) {
      if (text.empty()) break;
      throw DomainError("empty piece in word '" + std::string(text) + "'");
    }
    if (auto l = find(piece)) {
      out.push_back(*l);
    } else {
      single_chars(piece);
    }
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

}  // namespace brickwords
