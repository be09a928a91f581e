#include "liouspace/oracles.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "liouspace/errors.hpp"
#include "liouspace/field_io.hpp"
#include "liouspace/schrodinger_like.hpp"

namespace liouspace {

cplx brute_force_rho(double x, double xp, double t, const UniformGrid1D& pquad) {
    validate_grid(pquad, "brute_force_rho p quadrature");
    const double s = 0.5 * (x + xp);
    const double d = x - xp;
    constexpr double inv_pi = 1.0 / std::numbers::pi;
    cplx acc{};
    double max_sample = 0.0, max_edge = 0.0;
    for (std::size_t k = 0; k < pquad.n; ++k) {
        const double p = pquad.point(k);
        const double a = p + t;
        const double b = s - p * t - 0.5 * t * t;
        const double fv = inv_pi * std::exp(-a * a - b * b);
        if (fv > max_sample) max_sample = fv;
        if ((k == 0 || k + 1 == pquad.n) && fv > max_edge) max_edge = fv;
        acc += std::polar(trapezoid_weight(pquad, k) * fv, p * d);
    }
    if (max_edge > 1e-9 * max_sample)
        throw ValidationError("brute_force_rho: quadrature window too small, edge sample " +
                              format_double(max_edge) + " vs peak " + format_double(max_sample));
    return acc;
}

NegativityReport negativity_scan(const PhaseSpaceField& f, double eps) {
    f.validate();
    NegativityReport rep;
    rep.min_value = f.at(0, 0);
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < f.qgrid.n; ++i)
        for (std::size_t j = 0; j < f.pgrid.n; ++j)
            if (f.at(i, j) < rep.min_value) { // strict: first minimum wins
                rep.min_value = f.at(i, j);
                bi = i;
                bj = j;
            }
    rep.argmin = {f.qgrid.point(bi), f.pgrid.point(bj)};
    double mass = 0.0;
    for (std::size_t i = 0; i < f.qgrid.n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < f.pgrid.n; ++j) {
            const double v = f.at(i, j);
            if (v < 0.0) row += trapezoid_weight(f.pgrid, j) * (-v);
        }
        mass += trapezoid_weight(f.qgrid, i) * row;
    }
    rep.negative_mass = mass;
    rep.classical = rep.min_value >= -eps;
    return rep;
}

WaveFunctionField hermite_state(int n, const UniformGrid1D& xgrid) {
    if (n != 0 && n != 1)
        throw ValidationError("hermite_state: only n = 0 and n = 1 are provided");
    validate_grid(xgrid, "hermite_state axis");
    const double pref = std::pow(std::numbers::pi, -0.25);
    WaveFunctionField psi;
    psi.xgrid = xgrid;
    psi.time = 0.0;
    psi.values.resize(xgrid.n);
    for (std::size_t i = 0; i < xgrid.n; ++i) {
        const double x = xgrid.point(i);
        const double env = pref * std::exp(-0.5 * x * x);
        psi.values[i] = (n == 0) ? env : std::numbers::sqrt2 * x * env;
    }
    std::size_t anchor = 0;
    double best = psi.values[0].real();
    for (std::size_t i = 1; i < xgrid.n; ++i)
        if (psi.values[i].real() > best) {
            best = psi.values[i].real();
            anchor = i;
        }
    psi.gauge_anchor = anchor;
    const double nrm = psi.norm();
    if (std::abs(nrm - 1.0) > 1e-9)
        throw ValidationError("hermite_state: grid norm " + format_double(nrm) +
                              " misses 1 by more than 1e-9; widen or refine the axis");
    psi.validate();
    return psi;
}

ResidualReport marginal_check(const PhaseSpaceField& f, const WaveFunctionField& psi) {
    f.validate();
    psi.validate();
    if (!(f.qgrid == psi.xgrid))
        throw ValidationError("marginal_check: grid mismatch between the field q axis and the "
                              "wave-function axis");
    ResidualReport rep;
    double l2 = 0.0;
    for (std::size_t i = 0; i < f.qgrid.n; ++i) {
        double marg = 0.0;
        for (std::size_t j = 0; j < f.pgrid.n; ++j)
            marg += trapezoid_weight(f.pgrid, j) * f.at(i, j);
        const double r = marg - std::norm(psi.values[i]);
        const double ar = std::abs(r);
        if (ar > rep.max_abs) {
            rep.max_abs = ar;
            rep.location_of_max = {f.qgrid.point(i)};
        }
        l2 += trapezoid_weight(f.qgrid, i) * r * r;
    }
    rep.l2 = std::sqrt(l2);
    return rep;
}

OrderEstimate convergence_order(const std::function<double(double)>& residual_at, double h0,
                                int levels) {
    if (!residual_at) throw ValidationError("convergence_order: empty residual function");
    if (!(h0 > 0.0)) throw ValidationError("convergence_order: h0 must be positive");
    if (levels < 2) throw ValidationError("convergence_order: at least two levels required");
    std::vector<double> lh(levels), lr(levels);
    double h = h0;
    for (int k = 0; k < levels; ++k, h *= 0.5) {
        const double r = residual_at(h);
        if (!(r > 0.0))
            throw ValidationError("convergence_order: non-positive residual at h = " +
                                  format_double(h));
        if (r < 1e-14) return {std::nullopt, true};
        lh[k] = std::log(h);
        lr[k] = std::log(r);
    }
    double mh = 0.0, mr = 0.0;
    for (int k = 0; k < levels; ++k) {
        mh += lh[k];
        mr += lr[k];
    }
    mh /= levels;
    mr /= levels;
    double num = 0.0, den = 0.0;
    for (int k = 0; k < levels; ++k) {
        num += (lh[k] - mh) * (lr[k] - mr);
        den += (lh[k] - mh) * (lh[k] - mh);
    }
    return {num / den, false};
}

namespace {

struct RawParts {
    double d;     // 1 + t^2
    cplx exp_x;   // d/dx of the exponent
    cplx exp_xx;  // d2/dx2 of the exponent
    cplx exp_t;   // d/dt of the exponent
    double pref_t; // d/dt log of the prefactor
};

RawParts raw_parts(double x, double t) {
    RawParts r;
    const double t2 = t * t;
    r.d = 1.0 + t2;
    const double re = 0.5 * t2 * t2 + 2.0 * x * x + 2.0 * t2 * x;
    const double im = 4.0 * x * t - 2.0 * x * x * t + 2.0 * t2 * t * x;
    r.exp_x = -cplx(2.0 * x + t2, 2.0 * t - 2.0 * x * t + t2 * t) / (2.0 * r.d);
    r.exp_xx = -cplx(1.0, -t) / r.d;
    const double re_t = 2.0 * t2 * t + 4.0 * t * x;
    const double im_t = 4.0 * x - 2.0 * x * x + 6.0 * t2 * x;
    r.exp_t = -(cplx(re_t, im_t) * r.d - 2.0 * t * cplx(re, im)) / (4.0 * r.d * r.d);
    r.pref_t = -t / (2.0 * r.d);
    return r;
}

} // namespace

cplx psi_raw_dx(double x, double t) { return psi_gaussian_raw(x, t) * raw_parts(x, t).exp_x; }

cplx psi_raw_dxx(double x, double t) {
    const RawParts r = raw_parts(x, t);
    return psi_gaussian_raw(x, t) * (r.exp_x * r.exp_x + r.exp_xx);
}

cplx psi_raw_dt(double x, double t) {
    const RawParts r = raw_parts(x, t);
    return psi_gaussian_raw(x, t) * (r.pref_t + r.exp_t);
}

cplx schrodinger_residual_raw_analytic(double x, double t) {
    return -0.5 * psi_raw_dxx(x, t) + x * psi_gaussian_raw(x, t) -
           cplx(0.0, 1.0) * psi_raw_dt(x, t);
}

cplx schrodinger_residual_gauged_analytic(double x, double t) {
    const cplx raw = schrodinger_residual_raw_analytic(x, t) +
                     phase_rhs(t) * psi_gaussian_raw(x, t);
    return std::polar(1.0, phase_closed(t)) * raw;
}

cplx psi_gaussian_raw_t2(double x, double t) {
    const double t2 = t * t;
    const double d = 1.0 + t2;
    const double re = 0.5 * t2 + 2.0 * x * x + 2.0 * t2 * x;
    const double im = 4.0 * x * t - 2.0 * x * x * t + 2.0 * t2 * t * x;
    const double pref = std::pow(std::numbers::pi * d, -0.25);
    return pref * std::exp(cplx(-re / (4.0 * d), -im / (4.0 * d)));
}

} // namespace liouspace
