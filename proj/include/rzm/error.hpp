#ifndef RZM_ERROR_HPP
#define RZM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rzm {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument lies on (or within machine distance of) a pole.
struct pole_error : error {
    using error::error;
};

// Evaluation point lies on a kernel singularity (antipodal coincidence).
struct singularity_error : error {
    using error::error;
};

// Iterative scheme exhausted its budget before reaching tolerance.
struct convergence_error : error {
    using error::error;
};

// Mellin variable outside the transform's convergence strip.
struct strip_error : error {
    using error::error;
};

// Argument violates a documented precondition.
struct precondition_error : error {
    using error::error;
};

}  // namespace rzm

#endif
