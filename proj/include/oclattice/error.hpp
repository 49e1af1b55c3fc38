#ifndef OCLATTICE_ERROR_HPP
#define OCLATTICE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace oclattice
{

enum class ErrorCode
{
  EmptyWord,
  UnknownSymbol,
  ParseError,
  LetterAbsent,
  SizeCapExceeded,
  PatternTooLong,
  UnbalancedIdentity,
  DegreeCapExceeded,
  DegreeMismatch,
  LatticeCapExceeded,
  AssignmentCapExceeded,
  WordTooShort,
  NotOvercommutative,
  NoNormalFormFound,
  PremiseNotMet,
  InvariantViolation
};

constexpr std::string_view to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::EmptyWord: return "EmptyWord";
  case ErrorCode::UnknownSymbol: return "UnknownSymbol";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::LetterAbsent: return "LetterAbsent";
  case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
  case ErrorCode::PatternTooLong: return "PatternTooLong";
  case ErrorCode::UnbalancedIdentity: return "UnbalancedIdentity";
  case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
  case ErrorCode::DegreeMismatch: return "DegreeMismatch";
  case ErrorCode::LatticeCapExceeded: return "LatticeCapExceeded";
  case ErrorCode::AssignmentCapExceeded: return "AssignmentCapExceeded";
  case ErrorCode::WordTooShort: return "WordTooShort";
  case ErrorCode::NotOvercommutative: return "NotOvercommutative";
  case ErrorCode::NoNormalFormFound: return "NoNormalFormFound";
  case ErrorCode::PremiseNotMet: return "PremiseNotMet";
  case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// that front ends can map it onto an exit status.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &what)
  : std::runtime_error(std::string(to_string(code)) + ": " + what),
    _code(code)
  {}

  ErrorCode code() const noexcept
  { return _code; }

private:
  ErrorCode _code;
};

} // namespace oclattice

#endif // OCLATTICE_ERROR_HPP
