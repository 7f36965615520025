#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "brickwords/error.hpp"

namespace brickwords::detail {

// Character cursor with 1-based line/column tracking. '#' starts a comment
// that runs to the end of the line.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const noexcept { return text_.substr(pos_).starts_with(s); }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t position() const noexcept { return pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }
  [[noreturn]] static void fail_at(const std::string& message, std::size_t line, std::size_t column) {
    throw ParseError(message, line, column);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace brickwords::detail
