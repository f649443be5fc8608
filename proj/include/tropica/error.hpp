#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tropica {

enum class ErrorKind {
  Parse,           // malformed input (JSON, number literals, schema)
  InvalidArgument, // violated call contract (null handle, bad flag value)
  Domain,          // well-formed input outside an operation's domain
  NonTransverse,   // transverse_intersections on a non-transverse pair
  Precondition,    // patchworking preconditions (even weight, non-triangle)
  NonRegular,      // subdivision has no compatible lift
  Unsupported      // documented scope restriction (e.g. deg_y > 2)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string detail_json = "")
      : std::runtime_error(std::move(message)),
        kind_(kind),
        detail_(std::move(detail_json)) {}

  ErrorKind kind() const { return kind_; }
  // optional machine-readable payload, already serialized as JSON
  const std::string& detail_json() const { return detail_; }

  static const char* kind_name(ErrorKind k) {
    switch (k) {
      case ErrorKind::Parse: return "parse";
      case ErrorKind::InvalidArgument: return "invalid-argument";
      case ErrorKind::Domain: return "domain";
      case ErrorKind::NonTransverse: return "non-transverse";
      case ErrorKind::Precondition: return "precondition";
      case ErrorKind::NonRegular: return "non-regular";
      case ErrorKind::Unsupported: return "unsupported";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace tropica
