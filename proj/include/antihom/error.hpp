#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace antihom {

enum class ErrorKind {
  NotSquare,
  NotClosed,
  NoIdentity,
  NotAssociative,
  MissingInverse,
  NotNormal,
  ClosureViolation,
  AddNotAbelianGroup,
  MulNotMonoid,
  NotDistributive,
  BadInvolution,
  NotIdeal,
  NotComposable,
  LawViolation,
  NoInvolution,
  BoundExceeded,
  PreconditionFailed,
  BadIdentity,
  AxiomViolation,
  ParseError,
  ValidationError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::AddNotAbelianGroup: return "AddNotAbelianGroup";
    case ErrorKind::MulNotMonoid: return "MulNotMonoid";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::BadInvolution: return "BadInvolution";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::NoInvolution: return "NoInvolution";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

// Every failure carries the kind and a human-readable witness that pins down
// the offending element, pair or triple.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, std::string witness)
      : std::runtime_error(std::string(to_string(kind)) + ": " + witness),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

namespace detail {

inline void append_all(std::ostringstream&) {}

template <class T, class... Rest>
void append_all(std::ostringstream& os, const T& first, const Rest&... rest) {
  os << first;
  append_all(os, rest...);
}

}  // namespace detail

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  detail::append_all(os, parts...);
  return os.str();
}

template <class T>
std::string format_list(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

[[noreturn]] inline void fail(ErrorKind kind, std::string witness) {
  throw AlgebraError(kind, std::move(witness));
}

}  // namespace antihom
