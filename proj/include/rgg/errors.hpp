#ifndef RGG_ERRORS_HPP
#define RGG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rgg {

// Thrown when a clique cover violates one of the interval-cover conditions.
// The message names the first failed condition.
class InvalidCoverError : public std::invalid_argument {
public:
  explicit InvalidCoverError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown by decode() when a bit-string pair is not a valid structure code.
class MalformedCodeError : public std::invalid_argument {
public:
  explicit MalformedCodeError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown by parse() on bad magic, truncation, or invariant violation.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exhaustive operation is requested beyond its size guard.
class SizeLimitError : public std::invalid_argument {
public:
  explicit SizeLimitError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a closed-form distribution is requested outside its validity
// range (r >= 1/2).
class UnsupportedRangeError : public std::invalid_argument {
public:
  explicit UnsupportedRangeError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a conditioned Monte Carlo run accepts no samples.
class InsufficientDataError : public std::runtime_error {
public:
  explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rgg

#endif
