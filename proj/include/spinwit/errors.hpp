#pragma once

#include <stdexcept>
#include <string>

namespace spinwit {

// Base for every error raised by the library. The CLI maps the two families
// below onto exit codes 2 (bad input) and 3 (numerical / I-O).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input: bad parameters, config violations, size mismatches.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Runtime numerical or I/O failure.
class NumericalFailure : public Error {
public:
  using Error::Error;
};

class SymmetryViolation : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class DimensionError : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// A two-site density matrix has weight outside the X pattern.
class StructureViolation : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// Branch witness requested where the branch normalizer vanishes.
class DegenerateBranch : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// Hamiltonian witness denominator is zero.
class WitnessUndefined : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class ConfigError : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class NoCrossing : public NumericalFailure {
public:
  using NumericalFailure::NumericalFailure;
};

class IoError : public NumericalFailure {
public:
  using NumericalFailure::NumericalFailure;
};

} // namespace spinwit
