#pragma once

#include <stdexcept>
#include <string>

namespace spherevf {

/// Base class for all library errors. Everything thrown on a contract
/// violation or a negative verdict that cannot carry a certificate derives
/// from this, so callers (and the CLI) can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input shape errors: wrong variable counts, mismatched dimensions.
struct DimensionMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Textual input could not be parsed. `offset` is a 0-based position into
/// the input where the problem was detected.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

struct NotTangentError : Error {
    using Error::Error;
};

/// Sum identity required by the skew decomposition does not hold.
struct HypothesisViolatedError : Error {
    using Error::Error;
};

struct NotSkewError : Error {
    using Error::Error;
};

struct NotInvariantError : Error {
    using Error::Error;
};

struct NotFirstIntegralError : Error {
    int index;  // which candidate failed
    NotFirstIntegralError(const std::string& msg, int idx) : Error(msg), index(idx) {}
};

/// Rank search exhausted its point budget without certifying independence.
/// This does not prove the integrals dependent.
struct IndependenceNotCertifiedError : Error {
    using Error::Error;
};

struct DependentBasisError : Error {
    using Error::Error;
};

/// The extactic polynomial vanished identically: infinitely many invariant
/// elements of the family, or none detectable this way. Callers must handle
/// this case explicitly; it is never a silent empty result.
struct ZeroExtacticError : Error {
    using Error::Error;
};

struct EmptySectionError : Error {
    using Error::Error;
};

struct OddDimensionError : Error {
    using Error::Error;
};

struct NotDegreeOneHomogeneousError : Error {
    using Error::Error;
};

struct NotHomogeneousError : Error {
    using Error::Error;
};

/// A homogeneous field whose components do not satisfy the everywhere-zero
/// radial product cannot be decomposed as a purely rotational field.
struct NotTangentEverywhereError : Error {
    using Error::Error;
};

struct BadDegreeError : Error {
    using Error::Error;
};

struct BadParametersError : Error {
    using Error::Error;
};

/// Numerator substitution could not be cleared to a polynomial with the
/// given power of the common denominator.
struct ClearingFailedError : Error {
    using Error::Error;
};

struct DivisionFailedError : Error {
    using Error::Error;
};

struct NotInvariantEquatorError : Error {
    using Error::Error;
};

/// A structural consequence that is mathematically forced by the checked
/// preconditions failed to hold; indicates a bug upstream, not bad input.
struct StructureViolationError : Error {
    using Error::Error;
};

struct InternalInconsistencyError : Error {
    using Error::Error;
};

}  // namespace spherevf
