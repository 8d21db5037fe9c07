#pragma once

#include <stdexcept>
#include <string>

namespace kodsum {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument is well-formed but outside the domain of the operation
/// (wrong family, invalid matrix, nothing to trade, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Text input (family specs, class vectors, bundle literals, presentations)
/// could not be parsed.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

  private:
    std::size_t pos_;
};

} // namespace kodsum
