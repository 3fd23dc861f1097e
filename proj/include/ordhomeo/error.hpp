#ifndef ORDHOMEO_ERROR_HPP
#define ORDHOMEO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordhomeo
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text (ordinal expression, homeo file, constraint file).
/// `position` is a 0-based byte offset into the offending line or expression.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t position)
  : Error("parse error at position " + std::to_string(position) + ": " + what),
    _detail(what), _position(position)
  {}

  /// `line` is 1-based.
  ParseError(std::string const &what, std::size_t line, std::size_t position)
  : Error("parse error at line " + std::to_string(line) + ", position " +
          std::to_string(position) + ": " + what),
    _detail(what), _line(line), _position(position)
  {}

  std::string const &detail() const noexcept { return _detail; }
  std::size_t position() const noexcept { return _position; }
  /// 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return _line; }

private:
  std::string _detail;
  std::size_t _line = 0;
  std::size_t _position;
};

/// Argument outside the domain of an operation (e.g. a > b in left_subtract).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// A piece list that does not describe a valid piecewise homeomorphism.
class ValidationError : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Input violating the stated preconditions of a construction.
class PreconditionError : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Configured resource cap exceeded (nesting depth, brute-force size).
class ResourceError : public Error
{
public:
  using Error::Error;
};

/// An internal postcondition failed. Always a bug.
class ContractError : public Error
{
public:
  using Error::Error;
};

} // namespace ordhomeo

#endif // ORDHOMEO_ERROR_HPP
