#pragma once

#include <stdexcept>
#include <string>

namespace picard {

/// Base class for all solver-originated failures.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterate blew up (component magnitude above the divergence limit).
struct divergence_error : solver_error {
    divergence_error(const std::string& what, int iteration_, int segment_ = -1)
        : solver_error(what), iteration(iteration_), segment(segment_) {}
    int iteration;
    int segment;  // -1 when not running segmented
};

/// Least-squares fit could not be solved (coincident abscissas etc.).
struct degenerate_fit_error : solver_error {
    using solver_error::solver_error;
};

struct root_not_found_error : solver_error {
    using solver_error::solver_error;
};

struct shooting_failure_error : solver_error {
    using solver_error::solver_error;
};

/// The right-hand side uses a primitive the jet arithmetic does not cover.
struct unsupported_operation_error : solver_error {
    using solver_error::solver_error;
};

struct insufficient_roots_error : solver_error {
    using solver_error::solver_error;
};

}  // namespace picard
