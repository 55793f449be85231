#pragma once

#include <stdexcept>
#include <string>

namespace antimagic {

// Parameter outside the domain an operation is defined on (n < 2, wrong parity, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An edge labeling that is not a bijection onto [1, q].
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph / labeling / certificate documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Certificate whose graph hash does not match the graph it is checked against.
class WrongGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced something its closed forms disagree with.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antimagic
