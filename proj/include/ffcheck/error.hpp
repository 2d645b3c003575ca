#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffcheck {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied arguments outside an operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An expression or input file could not be parsed.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InvalidInput(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A function claimed to be an S-unit has a zero or pole outside S.
/// The witness is the printed squarefree part supported outside S (or "inf").
class NotAnSUnit : public InvalidInput {
 public:
  NotAnSUnit(const std::string& what, std::string witness)
      : InvalidInput(what + " (witness: " + witness + ")"), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A derivation frame was requested at a point that is not a rational point of S,
/// or S does not contain infinity.
class InvalidFrame : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A plane morphism meets the boundary divisor at a place outside S.
class ImageMeetsDivisor : public InvalidInput {
 public:
  ImageMeetsDivisor(const std::string& what, std::string place)
      : InvalidInput(what + " (place: " + place + ")"), place_(std::move(place)) {}
  const std::string& place() const noexcept { return place_; }

 private:
  std::string place_;
};

/// A configured size cap would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An inequality or identity proved in the underlying theory failed on a
/// concrete instance. This is either an implementation defect or a genuine
/// counterexample and must never be swallowed.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed (e.g. two independent computations of
/// the same quantity disagree).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ffcheck
