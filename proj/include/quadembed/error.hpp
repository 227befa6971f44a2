#ifndef QUADEMBED_ERROR_HPP_
#define QUADEMBED_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadembed {

  // Malformed or inconsistent user input (bad grammar, invalid table,
  // equation that is not quadratic, ...).
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Grammar violation at a known character offset.
  class ParseError : public InputError {
   public:
    ParseError(std::string const& what, std::size_t position)
        : InputError(what + " (at offset " + std::to_string(position) + ")"),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A machine check of the construction failed. This can only happen if
  // the implementation is wrong.
  class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The free-group backend could neither decide an equation nor find a
  // witness inside the configured search radius.
  class UndecidableError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace quadembed

#endif  // QUADEMBED_ERROR_HPP_
