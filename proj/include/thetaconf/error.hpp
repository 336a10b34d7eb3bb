#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetaconf {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Precondition,
  ResourceLimit,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception type thrown by every operation of the library. The C API maps
/// the code onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in textual input, carrying the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_precondition(const std::string& what);
[[noreturn]] void throw_resource(const std::string& what);

}  // namespace thetaconf
