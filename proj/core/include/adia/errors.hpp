#pragma once

#include <stdexcept>
#include <string>

namespace adia {

/// Base class for all numerical failures raised by this library.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// Requested combination is mathematically valid but not implemented.
class unsupported_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// An iterative method failed to reach its target tolerance.
class convergence_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// A truncated expansion cannot deliver the requested accuracy.
class accuracy_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// Phase continuation was asked to bridge a step with |delta arg| >= pi/2
/// even after refinement.
class branch_step_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// A grid no longer resolves the state it carries.
class resolution_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// A time step violates the stepper's accuracy/stability contract.
class stability_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

}  // namespace adia
