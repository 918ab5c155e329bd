#pragma once

#include <stdexcept>
#include <string>

namespace curvedim {

/// Input outside the mathematical domain of a formula (e.g. g^2 < d^3 where
/// the closed form needs g^2 >= d^3, or a negative radicand).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A query that is vacuous rather than unanswerable: no smooth irreducible
/// nondegenerate curve with these invariants exists (g above the Castelnuovo
/// bound).  Callers distinguish this from "the method found nothing".
struct OutOfRangeQuery : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural precondition violated (bad codimension, cap below start, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The Hilbert polynomial derived from a resolution is not linear.
struct NotACurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree or genus read off a resolution is not an integer.
struct NonIntegralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No admissible surface degree s exists for the given (d, g).
struct NoAdmissibleS : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed resolution description text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace curvedim
