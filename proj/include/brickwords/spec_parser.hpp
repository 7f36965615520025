#pragma once

#include <string_view>

#include "brickwords/morphism.hpp"

namespace brickwords {

/// Parses `rule (";" rule)*` with `rule = letter "->" word` into an
/// endomorphism whose alphabet is the left-hand letters in declaration
/// order. Words are juxtaposed single-character letters or "."-separated
/// tokens; `x^k` repeats a letter k times. Throws ParseError with the
/// line/column of the offending character, including for erasing images and
/// letters that have no rule.
Morphism parse_morphism(std::string_view text);

namespace detail {
class TextCursor;
// Parses one morphism starting at the cursor; stops after the last rule.
Morphism parse_morphism_at(TextCursor& cursor);
}  // namespace detail

}  // namespace brickwords
