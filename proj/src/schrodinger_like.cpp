#include "liouspace/schrodinger_like.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "kernels.hpp"
#include "liouspace/errors.hpp"
#include "liouspace/field_io.hpp"
#include "liouspace/log.hpp"

namespace liouspace {

cplx psi_gaussian_raw(double x, double t) {
    const double t2 = t * t;
    const double d = 1.0 + t2;
    const double re = 0.5 * t2 * t2 + 2.0 * x * x + 2.0 * t2 * x;
    const double im = 4.0 * x * t - 2.0 * x * x * t + 2.0 * t2 * t * x;
    const double pref = std::pow(std::numbers::pi * d, -0.25);
    return pref * std::exp(cplx(-re / (4.0 * d), -im / (4.0 * d)));
}

double residual_coefficient(double t) {
    const double t2 = t * t;
    return (4.0 + 8.0 * t2 + 3.0 * t2 * t2 + t2 * t2 * t2) / (8.0 * (1.0 + t2) * (1.0 + t2));
}

double phase_rhs(double t) { return -residual_coefficient(t); }

double phase_closed(double t) {
    return -t / 8.0 - t * t * t / 24.0 - 0.5 * std::atan(t) + t / (8.0 * (1.0 + t * t));
}

double GaugePhase::t_end() const {
    if (kind == Kind::closed_form || knot_t.empty()) return 0.0;
    return knot_t.back();
}

double GaugePhase::value(double t) const {
    if (kind == Kind::closed_form) return constant + phase_closed(t);
    if (knot_t.empty()) throw ValidationError("gauge phase: empty knot table");
    const double lo = knot_t.front();
    const double hi = knot_t.back();
    if (t < lo || t > hi)
        throw ValidationError("gauge phase: t=" + std::to_string(t) +
                              " outside the tabulated range [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
    const auto it = std::lower_bound(knot_t.begin(), knot_t.end(), t);
    std::size_t k = static_cast<std::size_t>(it - knot_t.begin());
    if (k < knot_t.size() && knot_t[k] == t) return constant + knot_phi[k];
    // t lies strictly inside the interval [k-1, k].
    const std::size_t a = k - 1;
    const double t0 = knot_t[a], t1 = knot_t[a + 1];
    const double dt = t1 - t0;
    const double s = (t - t0) / dt;
    const double m0 = phase_rhs(t0), m1 = phase_rhs(t1);
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return constant + h00 * knot_phi[a] + h10 * dt * m0 + h01 * knot_phi[a + 1] + h11 * dt * m1;
}

GaugePhase phase_integrate(double t_end, double step) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw ValidationError("phase_integrate: step must be positive");
    if (!std::isfinite(t_end)) throw ValidationError("phase_integrate: non-finite t_end");
    GaugePhase g;
    g.kind = GaugePhase::Kind::ode_integrated;
    g.constant = 0.0;
    g.knot_t.push_back(0.0);
    g.knot_phi.push_back(0.0);
    const double dir = t_end >= 0.0 ? 1.0 : -1.0;
    double t = 0.0, phi = 0.0;
    const double eps = 1e-15 * std::max(1.0, std::abs(t_end));
    while (dir * (t_end - t) > eps) {
        double h = dir * step;
        if (dir * (t_end - (t + h)) < 0.0) h = t_end - t; // final partial step
        // RK4 on phi' = phase_rhs(t) collapses to Simpson's rule.
        const double k1 = phase_rhs(t);
        const double k2 = phase_rhs(t + 0.5 * h);
        const double k4 = phase_rhs(t + h);
        phi += h / 6.0 * (k1 + 4.0 * k2 + k4);
        t += h;
        g.knot_t.push_back(t);
        g.knot_phi.push_back(phi);
    }
    if (dir < 0.0) { // value() expects ascending knots
        std::reverse(g.knot_t.begin(), g.knot_t.end());
        std::reverse(g.knot_phi.begin(), g.knot_phi.end());
    }
    log_line(LogLevel::debug, "phase_integrate: " + std::to_string(g.knot_t.size()) +
                                  " knots to t=" + format_double(t_end));
    return g;
}

cplx psi_gaussian_gauged(double x, double t) {
    return psi_gaussian_raw(x, t) * std::polar(1.0, phase_closed(t));
}

cplx psi_gaussian_gauged(double x, double t, const GaugePhase& phase) {
    return psi_gaussian_raw(x, t) * std::polar(1.0, phase.value(t));
}

cplx schrodinger_residual(const WaveSpaceTimeFn& psi, double x, double t, double hx, double ht) {
    if (!psi) throw ValidationError("schrodinger_residual: empty sampler");
    if (!(hx > 0.0) || !(ht > 0.0))
        throw ValidationError("schrodinger_residual: stencil steps must be positive");
    const cplx c = psi(x, t);
    const cplx dxx = (psi(x + hx, t) - 2.0 * c + psi(x - hx, t)) / (hx * hx);
    const cplx dt = (psi(x, t + ht) - psi(x, t - ht)) / (2.0 * ht);
    return -0.5 * dxx + x * c - cplx(0.0, 1.0) * dt;
}

cplx greens(double x, double xp, double t, double prefactor_phase) {
    if (!(t >= kGreensTMin))
        throw ValidationError("greens: t=" + std::to_string(t) + " below the " +
                              std::to_string(kGreensTMin) +
                              " cutoff; the kernel is singular as t -> 0");
    const double amp = 1.0 / std::sqrt(2.0 * std::numbers::pi * t);
    const double d = x - xp;
    const double phase =
        d * d / (2.0 * t) - 0.5 * t * (x + xp) - t * t * t / 24.0 + prefactor_phase;
    return std::polar(amp, phase);
}

cplx b_kernel(double x, double y, double xp, double yp, double t, double prefactor_phase) {
    return greens(x, xp, t, prefactor_phase) * std::conj(greens(y, yp, t, prefactor_phase));
}

WaveFunctionField propagate_psi(const WaveFunctionField& psi0, double t,
                                const UniformGrid1D& xgrid_out) {
    psi0.validate();
    validate_grid(xgrid_out, "propagate_psi output axis");
    if (!(t >= kGreensTMin))
        throw ValidationError("propagate_psi: t below the " + std::to_string(kGreensTMin) +
                              " cutoff");
    double peak = 0.0;
    for (const cplx& v : psi0.values) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(psi0.values.front()), std::abs(psi0.values.back()));
    if (edge > 1e-10 * peak)
        throw ValidationError("propagate_psi: input not decayed at the grid edges (edge/peak = " +
                              format_double(edge / peak) + ")");
    const double xmax_out = std::max(std::abs(xgrid_out.min), std::abs(xgrid_out.max));
    const double xmax_in = std::max(std::abs(psi0.xgrid.min), std::abs(psi0.xgrid.max));
    const double bound = std::numbers::pi * t / (xmax_out + xmax_in);
    if (psi0.xgrid.spacing() > bound)
        throw ValidationError("propagate_psi: chirp undersampled, input spacing " +
                              format_double(psi0.xgrid.spacing()) + " exceeds " +
                              format_double(bound));
    WaveFunctionField out;
    out.xgrid = xgrid_out;
    out.time = psi0.time + t;
    out.values.resize(xgrid_out.n);
    const std::int64_t n = static_cast<std::int64_t>(xgrid_out.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out.values[static_cast<std::size_t>(i)] =
            detail::propagate_psi_point(xgrid_out.point(static_cast<std::size_t>(i)), psi0, t);
    const double nrm = out.norm();
    if (std::abs(nrm - 1.0) > 1e-6)
        throw ComputeError("propagate_psi: output norm " + format_double(nrm) +
                           " deviates from 1 by more than 1e-6; widen or refine the grids");
    fix_gauge(out, argmax_abs(out.values));
    log_line(LogLevel::info, "propagate_psi: t=" + std::to_string(t) +
                                 " norm=" + format_double(nrm));
    return out;
}

} // namespace liouspace
