#ifndef WORDREP_ERROR_HPP
#define WORDREP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A textual literal (word, morphism, code, rational) could not be parsed.
/// `position()` is the zero-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain (empty word, bad bounds,
/// letter outside an alphabet, erasing morphism, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace wordrep

#endif  // WORDREP_ERROR_HPP
