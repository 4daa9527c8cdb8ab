#ifndef EPIKIT_ERROR_HPP_
#define EPIKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace epikit {

// Machine-checkable failure categories. The uppercase spellings returned by
// code_name() are the stable identifiers used in CLI reports and diagnostics.
enum class ErrorCode {
  bad_shape,
  not_associative,
  invalid_variable,
  unmapped_variable,
  unassigned_variable,
  not_one_variable,
  not_semigroup_word,
  not_nil,
  order_too_large,
  fresh_not_fresh,
  bad_indices,
  no_match,
  bad_position,
  unknown_rule,
  not_poset,
  not_lattice,
  size_too_large,
  no_bottom,
  parse_error,
  io_error,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace epikit

#endif  // EPIKIT_ERROR_HPP_
