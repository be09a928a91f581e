#pragma once
#include <functional>

#include "fields.hpp"

namespace liouspace {

// Dynamics of H = p^2/2 + q: unit mass falling with constant unit force.
struct PhasePoint {
    double q = 0.0;
    double p = 0.0;
};

double hamiltonian(PhasePoint pt);

// (q0, p0) -> (q0 + p0 t - t^2/2, p0 - t); exact for any real t.
PhasePoint flow_forward(PhasePoint pt0, double t);
// Inverse map: (q, p) -> (q - p t - t^2/2, p + t).
PhasePoint flow_backward(PhasePoint pt, double t);

// 2x2 real matrix acting on (q,p) deviations from the mean.
struct TransformMatrix {
    double qq = 1.0, qp = 0.0;
    double pq = 0.0, pp = 1.0;
    double det() const { return qq * pp - qp * pq; }
};

// Linearization of the flow: [[1,t],[0,1]]; det == 1 exactly.
TransformMatrix flow_matrix(double t);

// Symmetric second-moment matrix.
struct Dispersion {
    double qq = 0.0, qp = 0.0, pp = 0.0;
    double det() const { return qq * pp - qp * qp; }
    bool positive_definite() const { return qq > 0.0 && det() > 0.0; }
};

struct GaussianPhaseState {
    PhasePoint mean;
    Dispersion cov;
    void validate() const; // throws ValidationError on a non-SPD covariance
};

// Mean follows the flow, covariance maps as A cov A^T with A = flow_matrix(t).
GaussianPhaseState evolve_gaussian(const GaussianPhaseState& g0, double t);

// Normalized bivariate normal density at pt.
double gaussian_density(const GaussianPhaseState& g, PhasePoint pt);

// Exact Liouville propagation by pullback along the characteristics:
// f(q,p,t) = f0(flow_backward((q,p), t)). No quadrature involved.
PhaseSpaceField propagate_distribution(const std::function<double(double, double)>& f0,
                                       double t,
                                       const UniformGrid1D& qgrid,
                                       const UniformGrid1D& pgrid);

using PhaseSpaceTimeFn = std::function<double(double q, double p, double t)>;

// Central second-order stencil for df/dt + p df/dq - df/dp at (pt, t).
double liouville_residual(const PhaseSpaceTimeFn& f, PhasePoint pt, double t, double h);

} // namespace liouspace
