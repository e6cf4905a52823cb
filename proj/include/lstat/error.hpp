#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lstat {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_argument_error : public error {
 public:
  using error::error;
};

/// Requested size exceeds a table, a data range, or a compute budget.
class capacity_error : public error {
 public:
  using error::error;
};

/// Input that violates a mathematical precondition (e.g. a density that is
/// not positive, an argument inside a singular guard band).
class domain_error : public error {
 public:
  using error::error;
};

/// Data that is well-formed but inconsistent (non-monotone zeros, empty file).
class data_integrity_error : public error {
 public:
  using error::error;
};

class parse_error : public data_integrity_error {
 public:
  parse_error(const std::string& source, std::size_t line, const std::string& what)
      : data_integrity_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class corrupt_cache_error : public data_integrity_error {
 public:
  using data_integrity_error::data_integrity_error;
};

/// Coefficient data breaks a bound it must satisfy (Deligne, Hasse).
class invariant_violation : public data_integrity_error {
 public:
  using data_integrity_error::data_integrity_error;
};

}  // namespace lstat
