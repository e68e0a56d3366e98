#include "pftlab/error.hpp"

namespace pftlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return "malformed_input";
    case ErrorCode::invalid_model: return "invalid_model";
    case ErrorCode::bound_exceeded: return "bound_exceeded";
    case ErrorCode::out_of_range: return "out_of_range";
  }
  return "unknown";
}

}  // namespace pftlab
