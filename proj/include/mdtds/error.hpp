#pragma once

#include <stdexcept>
#include <string>

namespace mdt {

// Base of every error raised by the library. The CLI maps subclasses to
// stable exit codes.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

// Precondition violated by a caller-supplied argument.
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

// Node cap exceeded during enumeration.
class ResourceLimit : public Error
{
public:
  using Error::Error;
};

// A value left the phase space X, or a map could not be inverted at a point.
// `word` is the time at which it happened, in word text format.
class DomainViolation : public Error
{
public:
  DomainViolation(std::string const &what, std::string word)
    : Error(what + " (at t = " + word + ")"), word_(std::move(word))
  {
  }

  std::string const &word() const { return word_; }

private:
  std::string word_;
};

// f^k(x) is not representable in the scalar type (an irrational root in
// exact mode) or the map cannot be inverted at the point.
class NotRepresentable : public DomainViolation
{
public:
  explicit NotRepresentable(std::string const &what, std::string word = "?")
    : DomainViolation(what, std::move(word)), detail_(what)
  {
  }

  std::string const &detail() const { return detail_; }

private:
  std::string detail_;
};

} // namespace mdt
