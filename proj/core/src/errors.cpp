#include "busemann/errors.hpp"

namespace busemann {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Applicability: return "applicability";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

}  // namespace busemann
