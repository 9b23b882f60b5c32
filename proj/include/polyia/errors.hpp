#pragma once

#include <stdexcept>
#include <string>

namespace polyia {

// Base for everything this library throws on contract violations.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTranslationError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct WrongClassError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct LimitError : Error { using Error::Error; };
struct OperandOrderError : Error { using Error::Error; };
struct NotInImageError : Error { using Error::Error; };
struct MalformedDualError : Error { using Error::Error; };
struct ArgumentError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace polyia
