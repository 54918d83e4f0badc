#ifndef DRLAB_ERRORS_HPP
#define DRLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drlab {

/// An exact division had a nonzero remainder.
struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

/// Numeric input violates a nondegeneracy requirement (e.g. a_0 * a_n == 0).
struct NumericDegenerate : std::domain_error {
    using std::domain_error::domain_error;
};

/// The bracket expression does not cover the requested case ((n, r) == (2, 2)).
struct SpecialCase : std::domain_error {
    using std::domain_error::domain_error;
};

/// A bounded computation was asked to run past its configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace drlab

#endif  // DRLAB_ERRORS_HPP
