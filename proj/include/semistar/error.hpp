#pragma once

#include <stdexcept>
#include <string>

namespace semistar {

// Every failure the library reports derives from Error. The C API maps each
// subclass onto one ss_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite extended-integer arithmetic left the signed 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An argument is outside the operation's domain (zero module, zero rational,
// empty star list, non-prime label...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A size guard refused the request (enumeration beyond n = 5, posets too large
// for brute-force isomorphism, oracle windows too wide).
class GuardError : public Error {
 public:
  using Error::Error;
};

// Operands live over different prime spectra or ground sets.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace semistar
