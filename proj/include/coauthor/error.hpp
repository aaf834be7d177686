#pragma once

#include <stdexcept>
#include <string>

namespace coauthor {

// Base of every error the library throws. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed a value outside an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Node id or author id that does not exist in the graph.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Bad schema mapping or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Input file is readable but its contents are not.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Statistic requested on a graph where it has no value (e.g. average degree of zero nodes).
class UndefinedValueError : public Error {
 public:
  using Error::Error;
};

}  // namespace coauthor
