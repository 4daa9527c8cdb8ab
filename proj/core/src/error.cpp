#include "epikit/error.hpp"

namespace epikit {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_shape: return "BAD_SHAPE";
    case ErrorCode::not_associative: return "NOT_ASSOCIATIVE";
    case ErrorCode::invalid_variable: return "INVALID_VARIABLE";
    case ErrorCode::unmapped_variable: return "UNMAPPED_VARIABLE";
    case ErrorCode::unassigned_variable: return "UNASSIGNED_VARIABLE";
    case ErrorCode::not_one_variable: return "NOT_ONE_VARIABLE";
    case ErrorCode::not_semigroup_word: return "NOT_SEMIGROUP_WORD";
    case ErrorCode::not_nil: return "NOT_NIL";
    case ErrorCode::order_too_large: return "ORDER_TOO_LARGE";
    case ErrorCode::fresh_not_fresh: return "FRESH_NOT_FRESH";
    case ErrorCode::bad_indices: return "BAD_INDICES";
    case ErrorCode::no_match: return "NO_MATCH";
    case ErrorCode::bad_position: return "BAD_POSITION";
    case ErrorCode::unknown_rule: return "UNKNOWN_RULE";
    case ErrorCode::not_poset: return "NOT_POSET";
    case ErrorCode::not_lattice: return "NOT_LATTICE";
    case ErrorCode::size_too_large: return "SIZE_TOO_LARGE";
    case ErrorCode::no_bottom: return "NO_BOTTOM";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace epikit
