#pragma once
#include <string>
#include <vector>

#include "fields.hpp"

namespace liouspace {

// Plain-text container: '#'-prefixed metadata (kind, t, axis specs as
// <name>grid=<min>,<max>,<n>), then comma-separated records, second
// coordinate fastest. Every number is printed with 17 significant digits so
// a written file re-reads and re-writes byte-identically.
enum class FieldKind { phase_space_field, density_matrix, wave_function, phase_curve };

// Knots of an integrated gauge phase.
struct PhaseCurve {
    std::vector<double> t, phi;
};

void write_field(const std::string& path, const PhaseSpaceField& f);
void write_field(const std::string& path, const DensityMatrixField& rho);
void write_field(const std::string& path, const WaveFunctionField& psi);
void write_field(const std::string& path, const PhaseCurve& curve);

FieldKind peek_kind(const std::string& path);

PhaseSpaceField read_phase_space_field(const std::string& path);
DensityMatrixField read_density_matrix(const std::string& path);
WaveFunctionField read_wave_function(const std::string& path);
PhaseCurve read_phase_curve(const std::string& path);

// "%.17g" helper shared by the writers and the CLI.
std::string format_double(double v);

} // namespace liouspace
