#pragma once
#include <cstddef>
#include <vector>

namespace liouspace {

// Closed uniform grid with n >= 2 nodes; node i sits at min + i*spacing.
struct UniformGrid1D {
    double min = 0.0;
    double max = 1.0;
    std::size_t n = 2;

    double spacing() const { return (max - min) / static_cast<double>(n - 1); }
    double point(std::size_t i) const { return min + static_cast<double>(i) * spacing(); }
    bool operator==(const UniformGrid1D&) const = default;
};

// Validates max > min and n >= 2; throws ValidationError otherwise.
UniformGrid1D make_grid(double min, double max, std::size_t n);

// Same checks on an already-built grid; name goes into the error message.
void validate_grid(const UniformGrid1D& g, const char* name);

inline double trapezoid_weight(const UniformGrid1D& g, std::size_t i) {
    const double h = g.spacing();
    return (i == 0 || i + 1 == g.n) ? 0.5 * h : h;
}

// Composite trapezoid over samples taken on g. Accumulates left to right so
// the result is reproducible across runs and thread counts.
template <class T>
T trapezoid(const UniformGrid1D& g, const std::vector<T>& samples) {
    T acc{};
    for (std::size_t i = 0; i < g.n; ++i) acc += trapezoid_weight(g, i) * samples[i];
    return acc;
}

} // namespace liouspace
