// Exception types shared by the mtransfer headers.

#ifndef MTRANSFER_ERROR_HPP_
#define MTRANSFER_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtransfer {

  //! Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed or inconsistent input (bad token, erasing morphism, alphabet
  //! mismatch, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! A computation needs a deeper measure table or longer language than the
  //! one supplied.
  class DepthError : public Error {
   public:
    DepthError(std::size_t required, std::size_t available,
               std::string const& what)
        : Error(what + ": requires depth " + std::to_string(required)
                + ", available " + std::to_string(available)),
          _required(required),
          _available(available) {}

    [[nodiscard]] std::size_t required() const noexcept { return _required; }
    [[nodiscard]] std::size_t available() const noexcept { return _available; }

   private:
    std::size_t _required;
    std::size_t _available;
  };

  //! Text input that does not follow one of the file formats.
  class ParseError : public Error {
   public:
    // line 0 marks a problem with the input as a whole
    ParseError(std::size_t line, std::string const& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          _line(line), _message(message) {}

    [[nodiscard]] std::size_t line() const noexcept { return _line; }
    [[nodiscard]] std::string const& message() const noexcept { return _message; }

   private:
    std::size_t _line;
    std::string _message;
  };

}  // namespace mtransfer

#endif  // MTRANSFER_ERROR_HPP_
