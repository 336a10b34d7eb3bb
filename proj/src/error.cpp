#include "thetaconf/error.hpp"

namespace thetaconf {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Precondition: return "precondition violated";
    case ErrorCode::ResourceLimit: return "resource limit exceeded";
  }
  return "unknown error";
}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorCode::Parse,
            what + " at position " + std::to_string(position)),
      position_(position) {}

void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what);
}

void throw_precondition(const std::string& what) {
  throw Error(ErrorCode::Precondition, what);
}

void throw_resource(const std::string& what) {
  throw Error(ErrorCode::ResourceLimit, what);
}

}  // namespace thetaconf
