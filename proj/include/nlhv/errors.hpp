#pragma once

#include <stdexcept>

namespace nlhv {

/// A direction that cannot be normalized (zero or non-finite vector), or an
/// analyzer setting that is not a unit vector.
class InvalidDirection : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An angle outside the single period on which a formula is stated.
class AngleDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed quadrature rule, run configuration, or empty sample.
class InvalidConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace nlhv
