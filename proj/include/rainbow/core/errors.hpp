#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input exceeds a documented size bound (vertex count, edge count, colors).
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A certificate failed re-verification.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// A computation needs a cached exact value that is absent or only a bound.
class MissingRecord : public Error {
 public:
  using Error::Error;
};

}  // namespace rainbow
