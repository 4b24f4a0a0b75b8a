#pragma once

#include <stdexcept>
#include <string>

namespace kramanujan {

// Every failure raised by the library derives from `error`. The CLI maps
// each category onto a fixed exit code.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
 public:
  using error::error;
};

// Argument outside the mathematical domain of an operation (k <= 1,
// hypothesis of a bound violated, n < 1, ...).
class domain_error : public error {
 public:
  using error::error;
};

// k is valid but no built-in certificate is small enough to sieve to.
class unsupported_range_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Index or interval outside what a store or call can answer.
class range_error : public error {
 public:
  using error::error;
};

class insufficient_store_error : public range_error {
 public:
  using range_error::range_error;
};

class resource_error : public error {
 public:
  using error::error;
};

// A definition-level scan could not rule out failures beyond its horizon.
class inconclusive_error : public error {
 public:
  using error::error;
};

}  // namespace kramanujan
