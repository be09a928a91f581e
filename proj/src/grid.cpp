#include "liouspace/grid.hpp"

#include <cmath>
#include <string>

#include "liouspace/errors.hpp"

namespace liouspace {

UniformGrid1D make_grid(double min, double max, std::size_t n) {
    if (!std::isfinite(min) || !std::isfinite(max))
        throw ValidationError("grid bounds must be finite");
    if (!(max > min))
        throw ValidationError("grid requires max > min, got [" + std::to_string(min) + ", " +
                              std::to_string(max) + "]");
    if (n < 2) throw ValidationError("grid requires at least 2 points");
    return UniformGrid1D{min, max, n};
}

void validate_grid(const UniformGrid1D& g, const char* name) {
    if (!std::isfinite(g.min) || !std::isfinite(g.max) || !(g.max > g.min) || g.n < 2)
        throw ValidationError(std::string(name) + ": malformed grid");
}

} // namespace liouspace
