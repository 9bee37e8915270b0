#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRange : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct NonSplitField : Error { using Error::Error; };
struct InvalidLabel : Error { using Error::Error; };
struct Unclassified : Error { using Error::Error; };
struct NotInR0 : Error { using Error::Error; };
struct NegativeCoefficient : Error { using Error::Error; };
struct NotEndomorphism : Error { using Error::Error; };
struct ZeroMap : Error { using Error::Error; };

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace nichols
