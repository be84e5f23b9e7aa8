#ifndef FIXPOINT_ERRORS_HPP
#define FIXPOINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fixpoint {

/// Bad call arguments (empty grids, non-square matrices, invalid configs).
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A point left the domain where the metric / map / family is defined.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Non-finite values produced during evaluation.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sampled metric axiom failed; the message names the offending points.
struct metric_axiom_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace fixpoint

#endif // FIXPOINT_ERRORS_HPP
