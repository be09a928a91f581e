#include "liouspace/phase_flow.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "kernels.hpp"
#include "liouspace/errors.hpp"
#include "liouspace/log.hpp"

namespace liouspace {

double hamiltonian(PhasePoint pt) { return 0.5 * pt.p * pt.p + pt.q; }

PhasePoint flow_forward(PhasePoint pt0, double t) {
    return {pt0.q + pt0.p * t - 0.5 * t * t, pt0.p - t};
}

PhasePoint flow_backward(PhasePoint pt, double t) {
    return {pt.q - pt.p * t - 0.5 * t * t, pt.p + t};
}

TransformMatrix flow_matrix(double t) { return {1.0, t, 0.0, 1.0}; }

void GaussianPhaseState::validate() const {
    if (!std::isfinite(mean.q) || !std::isfinite(mean.p) || !std::isfinite(cov.qq) ||
        !std::isfinite(cov.qp) || !std::isfinite(cov.pp))
        throw ValidationError("Gaussian state: non-finite parameter");
    if (!cov.positive_definite())
        throw ValidationError("Gaussian state: covariance is not positive definite");
}

GaussianPhaseState evolve_gaussian(const GaussianPhaseState& g0, double t) {
    g0.validate();
    GaussianPhaseState g;
    g.mean = flow_forward(g0.mean, t);
    g.cov.qq = g0.cov.qq + 2.0 * t * g0.cov.qp + t * t * g0.cov.pp;
    g.cov.qp = g0.cov.qp + t * g0.cov.pp;
    g.cov.pp = g0.cov.pp;
    return g;
}

double gaussian_density(const GaussianPhaseState& g, PhasePoint pt) {
    const double det = g.cov.det();
    if (!(det > 0.0) || !(g.cov.qq > 0.0))
        throw ValidationError("Gaussian state: covariance is not positive definite");
    const double dq = pt.q - g.mean.q;
    const double dp = pt.p - g.mean.p;
    const double quad = (g.cov.pp * dq * dq - 2.0 * g.cov.qp * dq * dp + g.cov.qq * dp * dp) / det;
    return std::exp(-0.5 * quad) / (2.0 * std::numbers::pi * std::sqrt(det));
}

PhaseSpaceField propagate_distribution(const std::function<double(double, double)>& f0,
                                       double t,
                                       const UniformGrid1D& qgrid,
                                       const UniformGrid1D& pgrid) {
    if (!f0) throw ValidationError("propagate_distribution: empty sampler");
    validate_grid(qgrid, "propagate_distribution q axis");
    validate_grid(pgrid, "propagate_distribution p axis");
    if (!std::isfinite(t)) throw ValidationError("propagate_distribution: non-finite time");
    PhaseSpaceField out;
    out.qgrid = qgrid;
    out.pgrid = pgrid;
    out.time = t;
    out.values.resize(qgrid.n * pgrid.n);
    const std::int64_t rows = static_cast<std::int64_t>(qgrid.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i)
        detail::propagate_distribution_row(static_cast<std::size_t>(i), f0, t, qgrid, pgrid,
                                           &out.values[static_cast<std::size_t>(i) * pgrid.n]);
    log_line(LogLevel::info, "propagate_distribution: t=" + std::to_string(t) + " grid " +
                                 std::to_string(qgrid.n) + "x" + std::to_string(pgrid.n));
    return out;
}

double liouville_residual(const PhaseSpaceTimeFn& f, PhasePoint pt, double t, double h) {
    if (!f) throw ValidationError("liouville_residual: empty sampler");
    if (!(h > 0.0) || !std::isfinite(h))
        throw ValidationError("liouville_residual: stencil step must be positive");
    const double ft = (f(pt.q, pt.p, t + h) - f(pt.q, pt.p, t - h)) / (2.0 * h);
    const double fq = (f(pt.q + h, pt.p, t) - f(pt.q - h, pt.p, t)) / (2.0 * h);
    const double fp = (f(pt.q, pt.p + h, t) - f(pt.q, pt.p - h, t)) / (2.0 * h);
    return ft + pt.p * fq - fp;
}

} // namespace liouspace
