#ifndef CHARSLOPE_ERRORS_HPP
#define CHARSLOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charslope {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, slopes, JSON documents).
struct ParseError : Error {
    using Error::Error;
};

// A mathematically invalid argument: zero denominator, winding number < 2,
// division by an interval containing zero, non-coprime torus parameters, ...
struct DomainError : Error {
    using Error::Error;
};

// Structured data violating a documented invariant; message carries the
// field path, e.g. "knots[2].alexander: value at 1 is 2, expected 1".
struct ValidationError : Error {
    using Error::Error;
};

// The volume-length inequality cannot decide anything because the requested
// cap does not exceed 2*pi: the bound is vacuous, which is distinct from a
// definite "false".
struct VacuousBoundError : DomainError {
    using DomainError::DomainError;
};

// A census alternative survived every obstruction in an exclusion context.
// The pipeline refuses to proceed rather than emit an unsound region.
struct ExclusionIncompleteError : Error {
    ExclusionIncompleteError(std::string context, std::string alternative,
                             const std::string& message)
        : Error(message), context(std::move(context)),
          alternative(std::move(alternative)) {}
    std::string context;
    std::string alternative;
};

// A named pipeline precondition failed (target volume missing, target not an
// L-space knot, ...). Message names the failing requirement.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace charslope

#endif
