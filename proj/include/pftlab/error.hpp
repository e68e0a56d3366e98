#pragma once

#include <stdexcept>
#include <string>

namespace pftlab {

enum class ErrorCode {
  malformed_input,
  invalid_model,
  bound_exceeded,
  out_of_range,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Input could not be parsed into the expected shape.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what) : Error(ErrorCode::malformed_input, what) {}
};

/// Input parsed but violates a structural invariant (not a partial order,
/// not a distributive lattice, not a topology, not a nucleus, ...).
class InvalidModel : public Error {
 public:
  explicit InvalidModel(const std::string& what) : Error(ErrorCode::invalid_model, what) {}
};

/// A configured size bound would be exceeded.
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what) : Error(ErrorCode::bound_exceeded, what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(ErrorCode::out_of_range, what) {}
};

}  // namespace pftlab
