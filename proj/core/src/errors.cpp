#include "metabel/errors.hpp"

namespace metabel {

const char* to_string(ValidationFailure kind) {
  switch (kind) {
    case ValidationFailure::not_square: return "not_square";
    case ValidationFailure::odd_size: return "odd_size";
    case ValidationFailure::not_unimodular: return "not_unimodular";
    case ValidationFailure::degenerate_alexander: return "degenerate_alexander";
    case ValidationFailure::not_a_root_class: return "not_a_root_class";
  }
  return "unknown";
}

}  // namespace metabel
