#ifndef GLORDER_ERRORS_HPP
#define GLORDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glorder {

// Malformed input data: dimension mismatches, bad indices, unparsable files.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Weights must be positive integers; a zero weight has no matrix-order meaning.
struct weight_error : input_error {
    explicit weight_error(const std::string& msg) : input_error(msg) {}
};

// Raised when a quiver presentation is requested but degree-c maps cannot be
// spanned by arrow paths (n <= d); no presentation is produced in that case.
struct arrow_insufficient_error : std::runtime_error {
    explicit arrow_insufficient_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace glorder

#endif
