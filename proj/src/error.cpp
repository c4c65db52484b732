#include "commgraph/error.hpp"

namespace commgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::IdentityNotZero: return "IdentityNotZero";
    case ErrorKind::AbelianGroup: return "AbelianGroup";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::GraphDisconnected: return "GraphDisconnected";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace commgraph
