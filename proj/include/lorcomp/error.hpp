#ifndef LORCOMP_ERROR_HPP
#define LORCOMP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lorcomp {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A point or value is outside the domain of the operation.
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// A closed-form solve has no solution in the admissible range.
struct range_error : error {
    explicit range_error(const std::string& msg) : error(msg) {}
};

// Side lengths or distance data cannot be realized as a configuration.
struct non_realizable_error : error {
    explicit non_realizable_error(const std::string& msg) : error(msg) {}
};

// Caller-supplied distance data is internally inconsistent.
struct data_error : error {
    explicit data_error(const std::string& msg) : error(msg) {}
};

// A structural precondition of a construction is violated.
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// A causal-flag combination the checker does not handle.
struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

// Invariant violated inside the library itself.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace lorcomp

#endif
