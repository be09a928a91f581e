#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "liouspace/errors.hpp"
#include "liouspace/field_io.hpp"
#include "liouspace/oracles.hpp"
#include "liouspace/schrodinger_like.hpp"

using namespace liouspace;

namespace {

std::string tmp_path(const char* name) {
    return (std::filesystem::temp_directory_path() /
            (std::string("liouspace_io_") + name))
        .string();
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    os << content;
    REQUIRE(os.good());
}

PhaseSpaceField classical_gaussian_field() {
    PhaseSpaceField f;
    f.qgrid = make_grid(-6.0, 6.0, 33);
    f.pgrid = make_grid(-6.0, 6.0, 33);
    f.time = 0.25;
    f.classical = true;
    f.values.resize(f.qgrid.n * f.pgrid.n);
    for (std::size_t i = 0; i < f.qgrid.n; ++i)
        for (std::size_t j = 0; j < f.pgrid.n; ++j) {
            const double q = f.qgrid.point(i), p = f.pgrid.point(j);
            f.at(i, j) = std::exp(-q * q - p * p) / std::numbers::pi;
        }
    return f;
}

} // namespace

TEST_SUITE("fields_io") {

TEST_CASE("phase-space field: write, read, rewrite byte-identically") {
    const std::string a = tmp_path("psf_a.txt"), b = tmp_path("psf_b.txt");
    const PhaseSpaceField f = classical_gaussian_field();
    write_field(a, f);
    CHECK(peek_kind(a) == FieldKind::phase_space_field);
    const PhaseSpaceField g = read_phase_space_field(a);
    CHECK(g.time == f.time);
    CHECK(g.qgrid == f.qgrid);
    CHECK(g.pgrid == f.pgrid);
    CHECK(g.classical == f.classical);
    REQUIRE(g.values.size() == f.values.size());
    for (std::size_t k = 0; k < f.values.size(); ++k) CHECK(g.values[k] == f.values[k]);
    write_field(b, g);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("# classical=1") != std::string::npos);
}

TEST_CASE("density matrix: write, read, rewrite byte-identically") {
    const std::string a = tmp_path("dm_a.txt"), b = tmp_path("dm_b.txt");
    const UniformGrid1D g = make_grid(-6.0, 6.0, 65);
    const WaveFunctionField h0 = hermite_state(0, g);
    DensityMatrixField rho;
    rho.xgrid = g;
    rho.time = 0.0;
    rho.values.resize(g.n * g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            rho.at(i, j) = h0.values[i] * std::conj(h0.values[j]);
    write_field(a, rho);
    CHECK(peek_kind(a) == FieldKind::density_matrix);
    const DensityMatrixField back = read_density_matrix(a);
    CHECK(back.time == rho.time);
    CHECK(back.xgrid == rho.xgrid);
    for (std::size_t k = 0; k < rho.values.size(); ++k)
        CHECK(back.values[k] == rho.values[k]);
    write_field(b, back);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("wave function: write, read, rewrite byte-identically") {
    const std::string a = tmp_path("wf_a.txt"), b = tmp_path("wf_b.txt");
    const WaveFunctionField h1 = hermite_state(1, make_grid(-8.0, 8.0, 129));
    write_field(a, h1);
    CHECK(peek_kind(a) == FieldKind::wave_function);
    const WaveFunctionField back = read_wave_function(a);
    CHECK(back.time == h1.time);
    CHECK(back.xgrid == h1.xgrid);
    CHECK(back.gauge_anchor == h1.gauge_anchor);
    for (std::size_t k = 0; k < h1.values.size(); ++k)
        CHECK(back.values[k] == h1.values[k]);
    write_field(b, back);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("phase curve: write, read, rewrite byte-identically") {
    const std::string a = tmp_path("pc_a.txt"), b = tmp_path("pc_b.txt");
    const GaugePhase tab = phase_integrate(0.05, 1e-3);
    PhaseCurve curve{tab.knot_t, tab.knot_phi};
    write_field(a, curve);
    CHECK(peek_kind(a) == FieldKind::phase_curve);
    const PhaseCurve back = read_phase_curve(a);
    REQUIRE(back.t.size() == curve.t.size());
    for (std::size_t k = 0; k < curve.t.size(); ++k) {
        CHECK(back.t[k] == curve.t[k]);
        CHECK(back.phi[k] == curve.phi[k]);
    }
    write_field(b, back);
    CHECK(slurp(a) == slurp(b));

    PhaseCurve flat{{0.0, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_WITH_AS(write_field(tmp_path("pc_bad.txt"), flat),
                         doctest::Contains("increase strictly"), ValidationError);
}

TEST_CASE("reader rejects malformed files") {
    const std::string p = tmp_path("bad.txt");

    spit(p, "# t=0\n0,1,0\n");
    CHECK_THROWS_WITH_AS(read_wave_function(p), doctest::Contains("missing 'kind'"),
                         ValidationError);

    spit(p, "# kind=wave_function\n# t=0\n# xgrid=0,1,2\n# gauge_anchor=0\n0,1,0\n");
    CHECK_THROWS_WITH_AS(read_wave_function(p), doctest::Contains("records, expected"),
                         ValidationError);

    spit(p, "# kind=wave_function\n# t=0\n# xgrid=0,1,2\n# gauge_anchor=0\n"
            "0,1,0\n# t=1\n1,0,0\n");
    CHECK_THROWS_WITH_AS(read_wave_function(p),
                         doctest::Contains("metadata line after records"),
                         ValidationError);

    spit(p, "# kind=wave_function\n# t=0\n# xgrid=0,1,2\n# gauge_anchor=0\n"
            "0,1,0\n0.75,0,0\n");
    CHECK_THROWS_WITH_AS(read_wave_function(p),
                         doctest::Contains("does not match the grid"), ValidationError);

    spit(p, "# kind=wave_function\n# t=0\n# xgrid=0,1,2\n# gauge_anchor=0\n"
            "0,abc,0\n1,0,0\n");
    CHECK_THROWS_WITH_AS(read_wave_function(p), doctest::Contains("malformed number"),
                         ValidationError);

    spit(p, "# kind=wave_function\n# t=0\n# xgrid=0,1,2\n0,1,0\n1,0,0\n");
    CHECK_THROWS_WITH_AS(read_wave_function(p),
                         doctest::Contains("missing 'gauge_anchor'"), ValidationError);

    spit(p, "# kind=mystery\n0\n");
    CHECK_THROWS_WITH_AS(peek_kind(p), doctest::Contains("unknown kind"),
                         ValidationError);

    spit(p, "# kind=phase_curve\n# t=1\n# tgrid=0,1,2\n0,0\n1,0\n");
    CHECK_NOTHROW(read_phase_curve(p));
    spit(p, "# kind=phase_curve\n# t=1\n# tgrid=0,1,2\n1,0\n0,0\n");
    CHECK_THROWS_WITH_AS(read_phase_curve(p), doctest::Contains("increase strictly"),
                         ValidationError);
}

TEST_CASE("kind mismatch and missing files") {
    const std::string p = tmp_path("wf_kind.txt");
    write_field(p, hermite_state(0, make_grid(-8.0, 8.0, 65)));
    CHECK_THROWS_WITH_AS(read_density_matrix(p), doctest::Contains("expected"),
                         ValidationError);
    CHECK_THROWS_AS(read_wave_function(tmp_path("does_not_exist.txt")), ComputeError);
    CHECK_THROWS_AS(peek_kind(tmp_path("does_not_exist.txt")), ComputeError);
}

TEST_CASE("format_double survives the round trip") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
    for (double v : {0.1, 1.0 / 3.0, std::numbers::pi, -2.5e-17, 1e300}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

} // TEST_SUITE
