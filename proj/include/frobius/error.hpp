#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobius {

enum class Errc : std::uint8_t {
  Syntax,
  Arity,
  TypeMismatch,
  SizeLimit,
  NotTauTerm,
  IndexOutOfRange,
  NotParallel,
  SizeMismatch,
  ArityMismatch,
  SignMismatch,
  BadMatching,
  SignClash,
  OutOfRange,
  SizeGuard,
  ShapeMismatch,
  NonCommutativeData,
  BadInput,
};

inline std::string_view errcName(Errc c) {
  switch (c) {
    case Errc::Syntax: return "SyntaxError";
    case Errc::Arity: return "ArityError";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotTauTerm: return "NotTauTerm";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotParallel: return "NotParallel";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::SignMismatch: return "SignMismatch";
    case Errc::BadMatching: return "BadMatching";
    case Errc::SignClash: return "SignClash";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SizeGuard: return "SizeGuard";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NonCommutativeData: return "NonCommutativeData";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

/// Domain error. Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t position, const std::string& what)
      : Error(code, what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when target(f) != source(g) in a composite g . f.
class TypeMismatchError : public Error {
 public:
  TypeMismatchError(std::uint64_t expected, std::uint64_t found, std::string path)
      : Error(Errc::TypeMismatch, "expected " + std::to_string(expected) + " wires, found " +
                                      std::to_string(found) + " at " + path),
        expected_(expected),
        found_(found),
        path_(std::move(path)) {}

  std::uint64_t expected() const noexcept { return expected_; }
  std::uint64_t found() const noexcept { return found_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::uint64_t expected_;
  std::uint64_t found_;
  std::string path_;
};

}  // namespace frobius
