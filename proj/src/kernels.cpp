#include "kernels.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "liouspace/phase_flow.hpp"
#include "liouspace/schrodinger_like.hpp"

namespace liouspace::detail {

void f_to_rho_row(std::size_t i, const PhaseSamplerFn& f, const UniformGrid1D& xgrid,
                  const UniformGrid1D& pquad, cplx* row, RowStats& stats) {
    const double xi = xgrid.point(i);
    for (std::size_t j = 0; j < xgrid.n; ++j) {
        const double xj = xgrid.point(j);
        const double mid = 0.5 * (xi + xj);
        const double d = xi - xj;
        cplx acc{};
        for (std::size_t k = 0; k < pquad.n; ++k) {
            const double pk = pquad.point(k);
            const double fv = f(mid, pk);
            const double mag = std::abs(fv);
            if (mag > stats.max_sample) stats.max_sample = mag;
            if ((k == 0 || k + 1 == pquad.n) && mag > stats.max_edge) stats.max_edge = mag;
            acc += std::polar(trapezoid_weight(pquad, k) * fv, pk * d);
        }
        row[j] = acc;
    }
}

void rho_to_f_row(std::size_t i, const MatrixSamplerFn& rho, const UniformGrid1D& qgrid,
                  const UniformGrid1D& pgrid, const UniformGrid1D& uquad, double* row,
                  RowStats& stats) {
    const double qi = qgrid.point(i);
    std::vector<cplx> rv(uquad.n);
    for (std::size_t k = 0; k < uquad.n; ++k) {
        const double uk = uquad.point(k);
        rv[k] = rho(qi + 0.5 * uk, qi - 0.5 * uk);
        const double mag = std::abs(rv[k]);
        if (mag > stats.max_sample) stats.max_sample = mag;
        if ((k == 0 || k + 1 == uquad.n) && mag > stats.max_edge) stats.max_edge = mag;
    }
    constexpr double inv_two_pi = 1.0 / (2.0 * std::numbers::pi);
    for (std::size_t j = 0; j < pgrid.n; ++j) {
        const double pj = pgrid.point(j);
        cplx acc{};
        for (std::size_t k = 0; k < uquad.n; ++k)
            acc += trapezoid_weight(uquad, k) * rv[k] * std::polar(1.0, -pj * uquad.point(k));
        acc *= inv_two_pi;
        const double im = std::abs(acc.imag());
        if (im > stats.max_imag) stats.max_imag = im;
        row[j] = acc.real();
    }
}

void propagate_distribution_row(std::size_t i, const std::function<double(double, double)>& f0,
                                double t, const UniformGrid1D& qgrid,
                                const UniformGrid1D& pgrid, double* row) {
    const double qi = qgrid.point(i);
    for (std::size_t j = 0; j < pgrid.n; ++j) {
        const PhasePoint src = flow_backward({qi, pgrid.point(j)}, t);
        row[j] = f0(src.q, src.p);
    }
}

cplx propagate_psi_point(double x, const WaveFunctionField& psi0, double t) {
    const UniformGrid1D& g = psi0.xgrid;
    cplx acc{};
    for (std::size_t k = 0; k < g.n; ++k)
        acc += trapezoid_weight(g, k) * greens(x, g.point(k), t) * psi0.values[k];
    return acc;
}

} // namespace liouspace::detail
