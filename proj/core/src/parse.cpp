#include "epikit/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "epikit/error.hpp"

namespace epikit {

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::parse_error,
                msg + " at position " + std::to_string(pos_) + " in \"" +
                    std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  Word parse_product() {
    std::vector<Word> factors;
    factors.push_back(parse_factor());
    while (true) {
      auto c = peek();
      if (!c) break;
      if (*c == '*') {
        ++pos_;
        factors.push_back(parse_factor());
        continue;
      }
      if (std::islower(static_cast<unsigned char>(*c)) || *c == '(') {
        factors.push_back(parse_factor());
        continue;
      }
      break;
    }
    return concat_all(factors);
  }

  // primary followed by any mix of '~' and '^k' suffixes, applied in order.
  Word parse_factor() {
    Word w = parse_primary();
    while (true) {
      auto c = peek();
      if (c == '~') {
        ++pos_;
        w = pinv(w);
      } else if (c == '^') {
        ++pos_;
        w = pow(w, parse_number());
      } else {
        break;
      }
    }
    return w;
  }

  Word parse_primary() {
    auto c = peek();
    if (!c) fail("expected a variable or '('");
    if (*c == '(') {
      ++pos_;
      Word w = parse_product();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (!std::islower(static_cast<unsigned char>(*c)))
      fail("expected a variable or '('");
    std::string name(1, *c);
    ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      name += text_[pos_++];
    return Word::var(Variable(name));
  }

  std::size_t parse_number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a number after '^'");
    std::size_t value = std::stoull(std::string(text_.substr(start, pos_ - start)));
    if (value == 0) fail("power must be at least 1");
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_factor(const Word& factor, std::string& out) {
  if (factor.is_variable()) {
    out += factor.variable().name();
    return;
  }
  // pseudoinverse factor: parenthesize compound operands, chain postfix '~'
  Word inner = factor.pinv_operand();
  if (inner.is_variable() || inner.is_pinv()) {
    render_factor(inner, out);
  } else {
    out += '(';
    out += render(inner);
    out += ')';
  }
  out += '~';
}

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string render(const Word& w) {
  std::string out;
  bool first = true;
  for (const Word& factor : flatten(w)) {
    if (!first) out += ' ';
    first = false;
    render_factor(factor, out);
  }
  return out;
}

}  // namespace epikit
