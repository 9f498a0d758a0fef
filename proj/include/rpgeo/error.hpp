#pragma once

#include <stdexcept>
#include <string>

namespace rpgeo {

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (invalid model, violated
// system conditions, wrong formula for the orientation, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The effective difference number of a rank-1 system is 0, so the
// interval-separation argument has nothing to work with.
class EdnError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Arithmetic mixed two distinct square-free radicands.
class UnsupportedFieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rpgeo
