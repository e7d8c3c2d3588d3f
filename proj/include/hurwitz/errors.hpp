#ifndef HURWITZ_ERRORS_HPP
#define HURWITZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class of every error raised by the library. Computational failures
/// (caps, singularities, invalid input data) all derive from it so a front end
/// can map them to one exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class WorkCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A Cayley table violates a group axiom. `axiom()` names the axiom
/// ("closure", "identity", "inverse", "latin", "associativity").
class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, const std::string& what)
      : Error("not a group: " + axiom + " violated: " + what), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

class DivisionByZeroFunction : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class SingularDiagonal : public Error {
 public:
  using Error::Error;
};

class PoleAtOrigin : public Error {
 public:
  using Error::Error;
};

class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class Disconnected : public InvalidGraph {
 public:
  using InvalidGraph::InvalidGraph;
};

class MoveNotApplicable : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: unknown class label, bad partition, bad JSON shape.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace hurwitz

#endif  // HURWITZ_ERRORS_HPP
