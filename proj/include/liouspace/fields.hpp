#pragma once
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "grid.hpp"

namespace liouspace {

using cplx = std::complex<double>;

// Real scalar field f(q,p) on a tensor grid, row-major with p fastest.
struct PhaseSpaceField {
    UniformGrid1D qgrid, pgrid;
    std::vector<double> values;
    double time = 0.0;
    // Set only after a negativity scan passes; never assumed on construction.
    bool classical = false;

    double& at(std::size_t i, std::size_t j) { return values[i * pgrid.n + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * pgrid.n + j]; }
    double integral() const; // 2-d trapezoid
    void validate() const;   // finite values, dimensions consistent
};

// Complex kernel rho(x,x') on xgrid x xgrid, row-major with x' fastest.
struct DensityMatrixField {
    UniformGrid1D xgrid;
    std::vector<cplx> values;
    double time = 0.0;

    cplx& at(std::size_t i, std::size_t j) { return values[i * xgrid.n + j]; }
    cplx at(std::size_t i, std::size_t j) const { return values[i * xgrid.n + j]; }
    double trace() const;              // trapezoid of the real diagonal
    double hermiticity_defect() const; // max |rho_ij - conj(rho_ji)|
    // Hermitian to 1e-10, unit trace to 1e-6, diagonal real >= -1e-10.
    void validate() const;
};

struct WaveFunctionField {
    UniformGrid1D xgrid;
    std::vector<cplx> values;
    double time = 0.0;
    std::size_t gauge_anchor = 0; // sample held real-positive

    double norm() const; // trapezoid of |psi|^2
    // norm in [1 +- 1e-6]; values[gauge_anchor] imag <= 1e-12 and real > 0.
    void validate() const;
};

// Samplers over gridded data: exact at nodes, bilinear/linear between nodes,
// zero outside the stored domain. The field is captured by value.
std::function<double(double, double)> bilinear_sampler(PhaseSpaceField fld);
std::function<cplx(double, double)> bilinear_sampler(DensityMatrixField fld);
std::function<cplx(double)> linear_sampler(WaveFunctionField fld);

// Lowest index among entries of maximal modulus.
std::size_t argmax_abs(const std::vector<cplx>& v);

// Multiplies by a constant phase so values[anchor] becomes real-positive and
// records the anchor. Throws ValidationError if that sample is negligible.
void fix_gauge(WaveFunctionField& psi, std::size_t anchor);

} // namespace liouspace
