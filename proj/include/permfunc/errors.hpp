#pragma once

#include <stdexcept>
#include <string>

namespace permfunc {

/// Malformed textual input (cycle notation, scalar literal, group or
/// character descriptor, JSON document).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a mathematical precondition: degree
/// mismatch, enumeration cap exceeded, element outside a character's domain,
/// failed structural precondition of a check.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace permfunc
