#pragma once

#include <stdexcept>
#include <string>

namespace contactloc {

// Base class of all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid user-supplied input: bad weights, malformed JSON, grammar errors.
// Mapped to process exit code 2 by the command line front end.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Failure to parse the canonical text grammar for scalars and polynomials.
struct ParseError : ConfigError {
    explicit ParseError(const std::string& what) : ConfigError(what) {}
};

// A mathematical precondition of an operation does not hold for the given
// input.  Mapped to process exit code 3 by the command line front end.
struct MathPreconditionError : Error {
    explicit MathPreconditionError(const std::string& what) : Error(what) {}
};

// Two critical values beta_j/w_j coincide, so the critical set has
// positive-dimensional components and the per-circle data is undefined.
struct DegenerateCriticalSet : MathPreconditionError {
    explicit DegenerateCriticalSet(const std::string& what) : MathPreconditionError(what) {}
};

// A localization term carries exponent 0, i.e. some critical value is 0;
// the residue operation requires 0 to be a regular value.
struct LambdaZero : MathPreconditionError {
    explicit LambdaZero(const std::string& what) : MathPreconditionError(what) {}
};

// 0 is not a regular value in the interior of the moment map image.
struct ZeroNotRegular : MathPreconditionError {
    explicit ZeroNotRegular(const std::string& what) : MathPreconditionError(what) {}
};

// A fixed-point sum failed to cancel its poles.  Signals a class
// representative outside the cohomology ring, or an internal bug.
struct NonPolynomialResult : MathPreconditionError {
    explicit NonPolynomialResult(const std::string& what) : MathPreconditionError(what) {}
};

// A point handed to the moment map does not lie on the unit sphere.
struct OffSphereInput : MathPreconditionError {
    explicit OffSphereInput(const std::string& what) : MathPreconditionError(what) {}
};

// A rational function carries poles away from the origin; the residue
// machinery only supports poles at 0.
struct UnsupportedPole : MathPreconditionError {
    explicit UnsupportedPole(const std::string& what) : MathPreconditionError(what) {}
};

}  // namespace contactloc
