#pragma once

#include <stdexcept>
#include <string>

namespace patchcount {

enum class ErrorKind {
  Parse,       // malformed input text
  Validation,  // well-formed input violating a model invariant
  Capacity,    // instance exceeds a hard implementation limit
  Io,          // file system failure
  Internal,    // broken internal invariant; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Error(ErrorKind kind, int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        kind_(kind),
        line_(line),
        column_(column) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  int line_ = 0;
  int column_ = 0;
};

[[noreturn]] inline void fail_parse(int line, int column, const std::string& msg) {
  throw Error(ErrorKind::Parse, line, column, msg);
}

[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw Error(ErrorKind::Validation, msg);
}

[[noreturn]] inline void fail_capacity(const std::string& msg) {
  throw Error(ErrorKind::Capacity, msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw Error(ErrorKind::Internal, msg);
}

}  // namespace patchcount
