#pragma once

#include <stdexcept>
#include <string>

namespace railcap {

/// Input outside an operation's domain (negative capacity, quota above
/// production, mismatched dimensions, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by optimal_price when no competing group defines a price cap.
class UnconstrainedPrice : public DomainError {
public:
    using DomainError::DomainError;
};

/// An ell profile whose equilibrium CDF values leave [0, 1].
class InfeasibleProfile : public DomainError {
public:
    using DomainError::DomainError;
};

/// A result violated one of its own postconditions.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace railcap
