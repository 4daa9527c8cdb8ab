#ifndef EPIKIT_VARIABLE_HPP_
#define EPIKIT_VARIABLE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

namespace epikit {

// An alphabet symbol: one lowercase letter plus an optional decimal suffix
// ("x", "y2", "x10"). Ordering is letter-first, then numeric on the suffix,
// so x2 < x10.
class Variable {
 public:
  explicit Variable(std::string name);

  const std::string& name() const noexcept { return name_; }
  char letter() const noexcept { return name_[0]; }
  std::optional<std::size_t> suffix() const noexcept { return suffix_; }

  bool operator==(const Variable& other) const noexcept {
    return name_ == other.name_;
  }
  std::strong_ordering operator<=>(const Variable& other) const noexcept;

 private:
  std::string name_;
  std::optional<std::size_t> suffix_;
};

// Shorthand for the x1, x2, ... family.
Variable indexed_variable(char letter, std::size_t index);

}  // namespace epikit

#endif  // EPIKIT_VARIABLE_HPP_
