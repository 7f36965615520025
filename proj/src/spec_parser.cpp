#include "brickwords/spec_parser.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "brickwords/error.hpp"
#include "text_cursor.hpp"

namespace brickwords {
namespace {

struct RawRule {
  std::string lhs;
  std::string rhs;
  std::size_t lhs_line, lhs_column;
  std::size_t rhs_line, rhs_column;
};

bool is_token_char(char c) { return c != '\0' && !is_reserved_token_char(c); }

bool is_word_char(char c) { return is_token_char(c) || c == '.' || c == '^'; }

std::string read_token(detail::TextCursor& cur) {
  std::string out;
  while (!cur.at_end() && is_token_char(cur.peek()) && !cur.starts_with("->")) out.push_back(cur.advance());
  return out;
}

// Appends the letters of one rule's right-hand side to `out`.
void parse_image(const RawRule& rule, const Alphabet& alphabet, Word& out) {
  const std::string& text = rule.rhs;
  auto fail = [&](const std::string& msg, std::size_t idx) {
    detail::TextCursor::fail_at(msg, rule.rhs_line, rule.rhs_column + idx);
  };
  // Reads "^k" at text[i]; returns the repeat count and advances i.
  auto read_repeat = [&](std::size_t& i) -> std::size_t {
    if (i >= text.size() || text[i] != '^') return 1;
    const std::size_t caret = i++;
    std::size_t k = 0;
    const auto* first = text.data() + i;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr == first) fail("expected repetition count after '^'", caret);
    if (k == 0) fail("repetition count must be positive", caret);
    i += static_cast<std::size_t>(ptr - first);
    return k;
  };
  auto push = [&](Letter l, std::size_t k) { out.insert(out.end(), k, l); };

  std::size_t i = 0;
  while (true) {
    std::size_t end = text.find('.', i);
    if (end == std::string::npos) end = text.size();
    if (end == i) fail(text.empty() ? "erasing image for letter '" + rule.lhs + "'" : "empty piece in dotted word", i);
    const std::string_view piece(text.data() + i, end - i);
    const std::size_t caret = piece.find('^');
    const std::string_view body = piece.substr(0, caret);
    auto whole_token = [&]() -> std::optional<Letter> {
      if (caret != std::string_view::npos) {
        const std::string_view digits = piece.substr(caret + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) return std::nullopt;
      }
      return alphabet.find(body);
    };
    if (auto l = whole_token()) {
      std::size_t j = i + body.size();
      const std::size_t k = read_repeat(j);
      if (j != end) fail("unexpected character after repetition count", j);
      push(*l, k);
    } else {
      std::size_t j = i;
      while (j < end) {
        const char c = text[j];
        if (c == '^') fail("repetition '^' without a letter", j);
        auto letter = alphabet.find(std::string_view(&c, 1));
        if (!letter) fail("unknown letter '" + std::string(1, c) + "'", j);
        ++j;
        push(*letter, read_repeat(j));
      }
    }
    if (end == text.size()) break;
    i = end + 1;
  }
}

}  // namespace

namespace detail {

Morphism parse_morphism_at(TextCursor& cur) {
  std::vector<RawRule> rules;
  while (true) {
    cur.skip_space();
    RawRule rule{};
    rule.lhs_line = cur.line();
    rule.lhs_column = cur.column();
    rule.lhs = read_token(cur);
    if (rule.lhs.empty()) cur.fail(cur.at_end() ? "expected a rule 'letter->word'" : "expected a letter");
    cur.skip_space();
    if (!cur.starts_with("->")) cur.fail("expected '->' after letter '" + rule.lhs + "'");
    cur.advance();
    cur.advance();
    // Spaces after the arrow are tolerated; an empty word is reported as erasing.
    while (cur.peek() == ' ' || cur.peek() == '\t') cur.advance();
    rule.rhs_line = cur.line();
    rule.rhs_column = cur.column();
    while (!cur.at_end() && is_word_char(cur.peek())) rule.rhs.push_back(cur.advance());
    rules.push_back(std::move(rule));

    TextCursor look = cur;
    look.skip_space();
    if (look.peek() != ';') break;
    cur = look;
    cur.advance();
    TextCursor after = cur;
    after.skip_space();
    if (after.at_end() || after.peek() == '|') {
      cur = after;
      break;
    }
  }

  std::vector<std::string> tokens;
  for (const RawRule& r : rules) {
    for (const std::string& t : tokens)
      if (t == r.lhs) TextCursor::fail_at("duplicate rule for letter '" + r.lhs + "'", r.lhs_line, r.lhs_column);
    tokens.push_back(r.lhs);
  }
  Alphabet alphabet(tokens);
  std::vector<Word> images(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) parse_image(rules[i], alphabet, images[i]);
  return Morphism::endo(std::move(alphabet), std::move(images));
}

}  // namespace detail

Morphism parse_morphism(std::string_view text) {
  detail::TextCursor cur(text);
  cur.skip_space();
  if (cur.at_end()) cur.fail("empty morphism spec");
  Morphism m = detail::parse_morphism_at(cur);
  cur.skip_space();
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return m;
}

}  // namespace brickwords
