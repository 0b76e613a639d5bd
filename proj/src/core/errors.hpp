#pragma once

#include <stdexcept>
#include <string>

namespace lf {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad mathematical input (point off the stated fiber, zero covector, ...).
struct domain_error : error {
    using error::error;
};

// Adaptive step size underflow or step budget exhausted.
struct integration_error : error {
    using error::error;
};

// A profile failed its construction-time grid verification.
struct construction_error : error {
    using error::error;
};

// Invalid combinatorial or handle data.
struct data_error : error {
    using error::error;
};

// Malformed configuration document.
struct parse_error : error {
    using error::error;
};

} // namespace lf
