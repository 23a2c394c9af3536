#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bihilb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SubsetLimitExceeded : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class WindowInvalid : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotCompleteIntersection : public Error {
 public:
  using Error::Error;
};

/// Saturation did not stabilize before the padded window ran out.
class PaddingExhausted : public Error {
 public:
  PaddingExhausted(const std::string& what, int padding) : Error(what), padding_(padding) {}
  int padding() const { return padding_; }

 private:
  int padding_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at byte " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bihilb
