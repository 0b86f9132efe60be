#ifndef AWE_ERRORS_HPP
#define AWE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace awe {

// Base class for everything the simulator can throw.
class SimulationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// State left its admissible domain (theta at ground/zenith, cos(theta)
// division guard).
class DomainError : public SimulationError {
public:
  using SimulationError::SimulationError;
};

// Tangent-plane speed below epsilon: the velocity angle has no value.
class UndefinedVelocityAngle : public SimulationError {
public:
  using SimulationError::SimulationError;
};

// Exact 0/0 in an arctangent that regularization cannot remove.
class UndefinedAngle : public SimulationError {
public:
  using SimulationError::SimulationError;
};

// |delta| >= wing span: arcsin(delta/d_s) has no value.
class RollOutOfRange : public SimulationError {
public:
  using SimulationError::SimulationError;
};

// A state component became non-finite during integration.
class NumericBlowup : public SimulationError {
public:
  using SimulationError::SimulationError;
};

class NoConvergence : public SimulationError {
public:
  using SimulationError::SimulationError;
};

class NoEquilibrium : public SimulationError {
public:
  using SimulationError::SimulationError;
};

class RiccatiNoConvergence : public SimulationError {
public:
  using SimulationError::SimulationError;
};

// Scenario file could not be parsed (bad syntax, unknown key).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + what
                                     : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Scenario parsed but violates an invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace awe

#endif  // AWE_ERRORS_HPP
