#pragma once

#include <stdexcept>
#include <string>

namespace gsr {

// Malformed input: unparsable files, duplicate marks, bad formula clauses.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Magnitude guard tripped: values that do not fit the 64-bit mark domain
// or an explicit size guard (oracle, SAT reduction).
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gsr
