#pragma once

#include <stdexcept>
#include <string>

namespace qkg {

/// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input for which the requested quantity is undefined (e.g. polar angles of 0).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Two constraint equations cannot hold at once. `which` names the failing
/// relation, `residual` is its scaled violation.
class ConstraintIncompatible : public Error {
public:
    ConstraintIncompatible(std::string which, double residual)
        : Error("constraint incompatible: " + which + " (residual " + std::to_string(residual) + ")"),
          which_(std::move(which)),
          residual_(residual) {}

    const std::string& which() const noexcept { return which_; }
    double residual() const noexcept { return residual_; }

private:
    std::string which_;
    double residual_;
};

/// m^2 - theta.theta < 0: the evanescent branch, not supported.
class BranchViolation : public Error {
public:
    using Error::Error;
};

/// The 1/m current normalization was requested with m = 0.
class ZeroMass : public Error {
public:
    ZeroMass() : Error("zero mass: use the unnormalized current") {}
};

/// The temporal constant-quaternionic variant with theta = 0.
class TrivialSolution : public Error {
public:
    using Error::Error;
};

/// Step matching with beta = -1.
class DegenerateStep : public Error {
public:
    DegenerateStep() : Error("degenerate step: beta = -1") {}
};

class ZeroIncidentFlux : public Error {
public:
    ZeroIncidentFlux() : Error("zero incident flux: p_l cos^2(Theta) = 0") {}
};

/// A least-squares order fit was asked for residuals that are not all positive.
class DegenerateFit : public Error {
public:
    using Error::Error;
};

}  // namespace qkg
