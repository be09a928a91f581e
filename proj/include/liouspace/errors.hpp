#pragma once
#include <stdexcept>

namespace liouspace {

// Bad arguments, malformed files, misconfigured quadrature windows.
// The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-posed computation that legitimately fails a mathematical guarantee
// (mixed state handed to the factorizer, unitarity loss, ...). CLI exit code 1.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace liouspace
