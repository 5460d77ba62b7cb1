#include "fourcolor/error.hpp"

namespace fourcolor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::FixedPoint: return "FixedPoint";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::BadCode: return "BadCode";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::NotADipole: return "NotADipole";
    case ErrorKind::WouldDisconnect: return "WouldDisconnect";
    case ErrorKind::BadColors: return "BadColors";
    case ErrorKind::ColorMismatch: return "ColorMismatch";
    case ErrorKind::NotSingular: return "NotSingular";
    case ErrorKind::BadColorPair: return "BadColorPair";
    case ErrorKind::BadGenus: return "BadGenus";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CorruptFile: return "CorruptFile";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace fourcolor
