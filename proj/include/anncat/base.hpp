#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace anncat {

// Objects and morphisms are identified by small integers; all semantics
// live in tables (or in the procedural ops of a lazy category).
using ObjId = std::int32_t;
using MorId = std::int32_t;

inline constexpr ObjId kNoObj = -1;
inline constexpr MorId kNoMor = -1;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotComposable : Error {
  using Error::Error;
};
struct NoInverse : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct MissingStructure : Error {
  using Error::Error;
};

// Raised by the term parser; pos is a byte offset into the source text.
struct SyntaxError : Error {
  std::size_t pos;
  SyntaxError(const std::string& msg, std::size_t p)
      : Error(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};
struct UnknownName : SyntaxError {
  using SyntaxError::SyntaxError;
};

// Raised by the category-file loader; line is 1-based.
struct SchemaError : Error {
  int line;
  std::string key;
  SchemaError(const std::string& msg, int ln, std::string k = "")
      : Error("line " + std::to_string(ln) + ": " + msg),
        line(ln),
        key(std::move(k)) {}
};
struct ValidationError : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};
struct BoundExceeded : Error {
  unsigned long long estimate;
  BoundExceeded(const std::string& msg, unsigned long long est)
      : Error(msg + " (search space ~" + std::to_string(est) + ")"),
        estimate(est) {}
};
struct NoSolution : Error {
  using Error::Error;
};
struct MultipleSolutions : Error {
  using Error::Error;
};
struct InvalidRing : Error {
  using Error::Error;
};
struct InvalidBimodule : Error {
  using Error::Error;
};
struct InvalidMultiplicity : Error {
  using Error::Error;
};

}  // namespace anncat
