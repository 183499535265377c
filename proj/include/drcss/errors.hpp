#pragma once

#include <stdexcept>
#include <string>

namespace drcss {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad parameter, shape mismatch).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Lower-bound radicand is negative; the bound does not constrain the window.
class InfeasibleWindow : public Error {
 public:
  using Error::Error;
};

// A builder produced an object its own checker rejects.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// Malformed or schema-violating input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace drcss
