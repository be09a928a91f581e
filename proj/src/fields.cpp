#include "liouspace/fields.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "liouspace/errors.hpp"

namespace liouspace {

namespace {

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw ValidationError(std::string(what) + ": non-finite value");
}

void check_finite(cplx v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw ValidationError(std::string(what) + ": non-finite value");
}

// Index of the cell containing x and the fractional offset within it.
// Returns false when x lies outside [g.min, g.max]. Queries within 1e-9 of a
// node snap onto it so node lookups reproduce stored values exactly.
bool locate(const UniformGrid1D& g, double x, std::size_t& cell, double& frac) {
    if (x < g.min || x > g.max) return false;
    const double h = g.spacing();
    const double idx = (x - g.min) / h;
    const double r = std::round(idx);
    if (std::abs(idx - r) <= 1e-9 && r >= 0.0 && r < static_cast<double>(g.n)) {
        const std::size_t node = static_cast<std::size_t>(r);
        if (node == g.n - 1) {
            cell = g.n - 2;
            frac = 1.0;
        } else {
            cell = node;
            frac = 0.0;
        }
        return true;
    }
    cell = static_cast<std::size_t>(idx);
    if (cell >= g.n - 1) cell = g.n - 2; // x == g.max lands in the last cell
    frac = (x - g.point(cell)) / h;
    if (frac < 0.0) frac = 0.0;
    if (frac > 1.0) frac = 1.0;
    return true;
}

} // namespace

double PhaseSpaceField::integral() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < qgrid.n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < pgrid.n; ++j) row += trapezoid_weight(pgrid, j) * at(i, j);
        acc += trapezoid_weight(qgrid, i) * row;
    }
    return acc;
}

void PhaseSpaceField::validate() const {
    validate_grid(qgrid, "phase-space field q axis");
    validate_grid(pgrid, "phase-space field p axis");
    if (values.size() != qgrid.n * pgrid.n)
        throw ValidationError("phase-space field: value count does not match the grid");
    check_finite(time, "phase-space field time");
    double min_value = 0.0;
    for (double v : values) {
        check_finite(v, "phase-space field");
        if (v < min_value) min_value = v;
    }
    if (classical) {
        if (min_value < -1e-12)
            throw ValidationError("phase-space field flagged classical but has values below -1e-12");
        const double mass = integral();
        if (std::abs(mass - 1.0) > 1e-6)
            throw ValidationError("phase-space field flagged classical but mass deviates from 1 by " +
                                  std::to_string(std::abs(mass - 1.0)));
    }
}

double DensityMatrixField::trace() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < xgrid.n; ++i)
        acc += trapezoid_weight(xgrid, i) * at(i, i).real();
    return acc;
}

double DensityMatrixField::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < xgrid.n; ++i)
        for (std::size_t j = i; j < xgrid.n; ++j) {
            const double d = std::abs(at(i, j) - std::conj(at(j, i)));
            if (d > worst) worst = d;
        }
    return worst;
}

void DensityMatrixField::validate() const {
    validate_grid(xgrid, "density matrix axis");
    if (values.size() != xgrid.n * xgrid.n)
        throw ValidationError("density matrix: value count does not match the grid");
    check_finite(time, "density matrix time");
    for (const cplx& v : values) check_finite(v, "density matrix");
    const double defect = hermiticity_defect();
    if (defect > 1e-10)
        throw ValidationError("density matrix: Hermiticity defect " + std::to_string(defect) +
                              " exceeds 1e-10");
    for (std::size_t i = 0; i < xgrid.n; ++i)
        if (at(i, i).real() < -1e-10)
            throw ValidationError("density matrix: negative diagonal entry at index " +
                                  std::to_string(i));
    const double tr = trace();
    if (std::abs(tr - 1.0) > 1e-6)
        throw ValidationError("density matrix: trace deviates from 1 by " +
                              std::to_string(std::abs(tr - 1.0)));
}

double WaveFunctionField::norm() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < xgrid.n; ++i)
        acc += trapezoid_weight(xgrid, i) * std::norm(values[i]);
    return acc;
}

void WaveFunctionField::validate() const {
    validate_grid(xgrid, "wave function axis");
    if (values.size() != xgrid.n)
        throw ValidationError("wave function: value count does not match the grid");
    check_finite(time, "wave function time");
    for (const cplx& v : values) check_finite(v, "wave function");
    const double nrm = norm();
    if (std::abs(nrm - 1.0) > 1e-6)
        throw ValidationError("wave function: norm deviates from 1 by " +
                              std::to_string(std::abs(nrm - 1.0)));
    if (gauge_anchor >= values.size())
        throw ValidationError("wave function: gauge anchor out of range");
    const cplx a = values[gauge_anchor];
    if (!(a.real() > 0.0) || std::abs(a.imag()) > 1e-12)
        throw ValidationError("wave function: anchor sample is not real-positive");
}

std::function<double(double, double)> bilinear_sampler(PhaseSpaceField fld) {
    return [fld = std::move(fld)](double q, double p) -> double {
        std::size_t i, j;
        double a, b;
        if (!locate(fld.qgrid, q, i, a) || !locate(fld.pgrid, p, j, b)) return 0.0;
        return (1.0 - a) * ((1.0 - b) * fld.at(i, j) + b * fld.at(i, j + 1)) +
               a * ((1.0 - b) * fld.at(i + 1, j) + b * fld.at(i + 1, j + 1));
    };
}

std::function<cplx(double, double)> bilinear_sampler(DensityMatrixField fld) {
    return [fld = std::move(fld)](double x, double xp) -> cplx {
        std::size_t i, j;
        double a, b;
        if (!locate(fld.xgrid, x, i, a) || !locate(fld.xgrid, xp, j, b)) return cplx{};
        return (1.0 - a) * ((1.0 - b) * fld.at(i, j) + b * fld.at(i, j + 1)) +
               a * ((1.0 - b) * fld.at(i + 1, j) + b * fld.at(i + 1, j + 1));
    };
}

std::function<cplx(double)> linear_sampler(WaveFunctionField fld) {
    return [fld = std::move(fld)](double x) -> cplx {
        std::size_t i;
        double a;
        if (!locate(fld.xgrid, x, i, a)) return cplx{};
        return (1.0 - a) * fld.values[i] + a * fld.values[i + 1];
    };
}

std::size_t argmax_abs(const std::vector<cplx>& v) {
    std::size_t best = 0;
    double mag = v.empty() ? 0.0 : std::abs(v[0]);
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double m = std::abs(v[i]);
        if (m > mag) {
            mag = m;
            best = i;
        }
    }
    return best;
}

void fix_gauge(WaveFunctionField& psi, std::size_t anchor) {
    if (anchor >= psi.values.size())
        throw ValidationError("fix_gauge: anchor out of range");
    const cplx a = psi.values[anchor];
    const double mag = std::abs(a);
    if (mag < 1e-14) throw ValidationError("fix_gauge: anchor sample is negligible");
    const cplx rot = std::conj(a) / mag;
    for (cplx& v : psi.values) v *= rot;
    psi.values[anchor] = cplx(mag, 0.0); // kill the rounding residue exactly
    psi.gauge_anchor = anchor;
}

} // namespace liouspace
