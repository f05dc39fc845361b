#pragma once

#include <stdexcept>
#include <string>

namespace sfdc {

// Base of every error thrown by the library. The CLI maps these to exit
// codes, so anything derived from Error is considered an input/usage problem
// unless it is explicitly a verification failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LetterCountError : public Error {
 public:
  using Error::Error;
};

class EmptyTokenError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class GradeError : public Error {
 public:
  using Error::Error;
};

class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when right-half linking of the nested word closes a loop. That can
// only happen through a bookkeeping bug, never through user input.
class CircleUnexpectedError : public Error {
 public:
  using Error::Error;
};

class BasePointError : public Error {
 public:
  using Error::Error;
};

}  // namespace sfdc
