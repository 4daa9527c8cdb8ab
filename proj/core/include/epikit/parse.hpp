#ifndef EPIKIT_PARSE_HPP_
#define EPIKIT_PARSE_HPP_

#include <string>
#include <string_view>

#include "epikit/word.hpp"

namespace epikit {

// Term grammar (UTF-8 text):
//   variable  = lowercase letter + optional digits        x, x1, y10
//   product   = juxtaposition or '*'                      x y, x*y, xy
//   pinv      = postfix '~', binds tighter than product   x~, (x y)~~
//   power     = postfix '^k', k >= 1, after any '~'       x^2, x~^3, (x y)^2
//   parentheses group.
// Throws PARSE_ERROR with a character position on bad input.
Word parse_word(std::string_view text);

// Canonical rendering: factors separated by spaces, pseudoinversion as
// postfix '~' with parentheses around compound operands. parse_word is a
// left inverse of render up to associativity.
std::string render(const Word& w);

}  // namespace epikit

#endif  // EPIKIT_PARSE_HPP_
