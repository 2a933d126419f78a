#ifndef ANAFORO_ERROR_HPP_
#define ANAFORO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace anaforo {

// Base class for all data and configuration errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& msg)
      : Error(source + ":" + std::to_string(line) + ": " + msg),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const char* kind() const noexcept override { return "parse"; }

 private:
  std::string source_;
  int line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

// Inconsistency between two inputs, e.g. gold annotations that point
// outside their document.
class DataError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "data"; }
};

}  // namespace anaforo

#endif  // ANAFORO_ERROR_HPP_
