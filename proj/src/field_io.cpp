#include "liouspace/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "liouspace/errors.hpp"

namespace liouspace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

const char* kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::phase_space_field: return "phase_space_field";
        case FieldKind::density_matrix: return "density_matrix";
        case FieldKind::wave_function: return "wave_function";
        case FieldKind::phase_curve: return "phase_curve";
    }
    return "";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ComputeError("cannot open for writing: " + path);
    return os;
}

void finish(std::ofstream& os, const std::string& path) {
    os.flush();
    if (!os) throw ComputeError("write failed: " + path);
}

void write_grid_line(std::ofstream& os, const char* name, const UniformGrid1D& g) {
    os << "# " << name << "grid=" << format_double(g.min) << ',' << format_double(g.max) << ','
       << g.n << '\n';
}

double parse_double(const std::string& s, const std::string& where) {
    const char* c = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(c, &end);
    if (end == c || *end != '\0')
        throw ValidationError("malformed number '" + s + "' in " + where);
    return v;
}

std::size_t parse_size(const std::string& s, const std::string& where) {
    const char* c = s.c_str();
    char* end = nullptr;
    const unsigned long long v = std::strtoull(c, &end, 10);
    if (end == c || *end != '\0')
        throw ValidationError("malformed count '" + s + "' in " + where);
    return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

struct ParsedFile {
    std::map<std::string, std::string> meta;
    std::vector<std::string> records;
    std::string path;
};

ParsedFile parse_file(const std::string& path, bool header_only = false) {
    std::ifstream is(path);
    if (!is) throw ComputeError("cannot open: " + path);
    ParsedFile pf;
    pf.path = path;
    std::string line;
    bool in_header = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!in_header)
                throw ValidationError(path + ": metadata line after records");
            if (line.size() < 2 || line[1] != ' ')
                throw ValidationError(path + ": malformed metadata line '" + line + "'");
            const std::string body = line.substr(2);
            const std::size_t eq = body.find('=');
            if (eq == std::string::npos)
                throw ValidationError(path + ": metadata line without '=': '" + line + "'");
            pf.meta[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        in_header = false;
        if (header_only) break;
        pf.records.push_back(line);
    }
    if (pf.meta.find("kind") == pf.meta.end())
        throw ValidationError(path + ": missing 'kind' metadata");
    return pf;
}

const std::string& require(const ParsedFile& pf, const std::string& key) {
    const auto it = pf.meta.find(key);
    if (it == pf.meta.end())
        throw ValidationError(pf.path + ": missing '" + key + "' metadata");
    return it->second;
}

UniformGrid1D parse_grid(const ParsedFile& pf, const std::string& key) {
    const std::string& spec = require(pf, key);
    const auto parts = split(spec);
    if (parts.size() != 3)
        throw ValidationError(pf.path + ": '" + key + "' needs min,max,n");
    return make_grid(parse_double(parts[0], key), parse_double(parts[1], key),
                     parse_size(parts[2], key));
}

void expect_kind(const ParsedFile& pf, FieldKind k) {
    if (require(pf, "kind") != kind_name(k))
        throw ValidationError(pf.path + ": kind '" + pf.meta.at("kind") + "', expected '" +
                              kind_name(k) + "'");
}

void check_coordinate(double got, double expected, const ParsedFile& pf, std::size_t record) {
    if (std::abs(got - expected) > 1e-12 * std::max(1.0, std::abs(expected)))
        throw ValidationError(pf.path + ": record " + std::to_string(record) +
                              " coordinate " + format_double(got) + " does not match the grid ("
                              + format_double(expected) + ")");
}

std::vector<std::string> record_fields(const ParsedFile& pf, std::size_t idx,
                                       std::size_t expected) {
    const auto parts = split(pf.records[idx]);
    if (parts.size() != expected)
        throw ValidationError(pf.path + ": record " + std::to_string(idx) + " has " +
                              std::to_string(parts.size()) + " fields, expected " +
                              std::to_string(expected));
    return parts;
}

void check_record_count(const ParsedFile& pf, std::size_t expected) {
    if (pf.records.size() != expected)
        throw ValidationError(pf.path + ": " + std::to_string(pf.records.size()) +
                              " records, expected " + std::to_string(expected));
}

} // namespace

void write_field(const std::string& path, const PhaseSpaceField& f) {
    f.validate();
    std::ofstream os = open_out(path);
    os << "# kind=phase_space_field\n";
    os << "# t=" << format_double(f.time) << '\n';
    write_grid_line(os, "q", f.qgrid);
    write_grid_line(os, "p", f.pgrid);
    os << "# classical=" << (f.classical ? 1 : 0) << '\n';
    for (std::size_t i = 0; i < f.qgrid.n; ++i) {
        const std::string qs = format_double(f.qgrid.point(i));
        for (std::size_t j = 0; j < f.pgrid.n; ++j)
            os << qs << ',' << format_double(f.pgrid.point(j)) << ','
               << format_double(f.at(i, j)) << '\n';
    }
    finish(os, path);
}

void write_field(const std::string& path, const DensityMatrixField& rho) {
    rho.validate();
    std::ofstream os = open_out(path);
    os << "# kind=density_matrix\n";
    os << "# t=" << format_double(rho.time) << '\n';
    write_grid_line(os, "x", rho.xgrid);
    for (std::size_t i = 0; i < rho.xgrid.n; ++i) {
        const std::string xs = format_double(rho.xgrid.point(i));
        for (std::size_t j = 0; j < rho.xgrid.n; ++j) {
            const cplx v = rho.at(i, j);
            os << xs << ',' << format_double(rho.xgrid.point(j)) << ','
               << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
        }
    }
    finish(os, path);
}

void write_field(const std::string& path, const WaveFunctionField& psi) {
    psi.validate();
    std::ofstream os = open_out(path);
    os << "# kind=wave_function\n";
    os << "# t=" << format_double(psi.time) << '\n';
    write_grid_line(os, "x", psi.xgrid);
    os << "# gauge_anchor=" << psi.gauge_anchor << '\n';
    for (std::size_t i = 0; i < psi.xgrid.n; ++i)
        os << format_double(psi.xgrid.point(i)) << ',' << format_double(psi.values[i].real())
           << ',' << format_double(psi.values[i].imag()) << '\n';
    finish(os, path);
}

void write_field(const std::string& path, const PhaseCurve& curve) {
    if (curve.t.size() != curve.phi.size() || curve.t.empty())
        throw ValidationError("phase curve: knot arrays empty or mismatched");
    for (std::size_t i = 1; i < curve.t.size(); ++i)
        if (!(curve.t[i] > curve.t[i - 1]))
            throw ValidationError("phase curve: knots must increase strictly");
    std::ofstream os = open_out(path);
    os << "# kind=phase_curve\n";
    os << "# t=" << format_double(curve.t.back()) << '\n';
    os << "# tgrid=" << format_double(curve.t.front()) << ',' << format_double(curve.t.back())
       << ',' << curve.t.size() << '\n';
    for (std::size_t i = 0; i < curve.t.size(); ++i)
        os << format_double(curve.t[i]) << ',' << format_double(curve.phi[i]) << '\n';
    finish(os, path);
}

FieldKind peek_kind(const std::string& path) {
    const ParsedFile pf = parse_file(path, /*header_only=*/true);
    const std::string& k = pf.meta.at("kind");
    if (k == "phase_space_field") return FieldKind::phase_space_field;
    if (k == "density_matrix") return FieldKind::density_matrix;
    if (k == "wave_function") return FieldKind::wave_function;
    if (k == "phase_curve") return FieldKind::phase_curve;
    throw ValidationError(path + ": unknown kind '" + k + "'");
}

PhaseSpaceField read_phase_space_field(const std::string& path) {
    const ParsedFile pf = parse_file(path);
    expect_kind(pf, FieldKind::phase_space_field);
    PhaseSpaceField f;
    f.time = parse_double(require(pf, "t"), "t");
    f.qgrid = parse_grid(pf, "qgrid");
    f.pgrid = parse_grid(pf, "pgrid");
    if (pf.meta.count("classical")) f.classical = require(pf, "classical") == "1";
    check_record_count(pf, f.qgrid.n * f.pgrid.n);
    f.values.resize(pf.records.size());
    for (std::size_t i = 0; i < f.qgrid.n; ++i)
        for (std::size_t j = 0; j < f.pgrid.n; ++j) {
            const std::size_t r = i * f.pgrid.n + j;
            const auto parts = record_fields(pf, r, 3);
            check_coordinate(parse_double(parts[0], "q"), f.qgrid.point(i), pf, r);
            check_coordinate(parse_double(parts[1], "p"), f.pgrid.point(j), pf, r);
            f.values[r] = parse_double(parts[2], "value");
        }
    f.validate();
    return f;
}

DensityMatrixField read_density_matrix(const std::string& path) {
    const ParsedFile pf = parse_file(path);
    expect_kind(pf, FieldKind::density_matrix);
    DensityMatrixField rho;
    rho.time = parse_double(require(pf, "t"), "t");
    rho.xgrid = parse_grid(pf, "xgrid");
    check_record_count(pf, rho.xgrid.n * rho.xgrid.n);
    rho.values.resize(pf.records.size());
    for (std::size_t i = 0; i < rho.xgrid.n; ++i)
        for (std::size_t j = 0; j < rho.xgrid.n; ++j) {
            const std::size_t r = i * rho.xgrid.n + j;
            const auto parts = record_fields(pf, r, 4);
            check_coordinate(parse_double(parts[0], "x"), rho.xgrid.point(i), pf, r);
            check_coordinate(parse_double(parts[1], "xp"), rho.xgrid.point(j), pf, r);
            rho.values[r] = cplx(parse_double(parts[2], "re"), parse_double(parts[3], "im"));
        }
    rho.validate();
    return rho;
}

WaveFunctionField read_wave_function(const std::string& path) {
    const ParsedFile pf = parse_file(path);
    expect_kind(pf, FieldKind::wave_function);
    WaveFunctionField psi;
    psi.time = parse_double(require(pf, "t"), "t");
    psi.xgrid = parse_grid(pf, "xgrid");
    psi.gauge_anchor = parse_size(require(pf, "gauge_anchor"), "gauge_anchor");
    check_record_count(pf, psi.xgrid.n);
    psi.values.resize(pf.records.size());
    for (std::size_t i = 0; i < psi.xgrid.n; ++i) {
        const auto parts = record_fields(pf, i, 3);
        check_coordinate(parse_double(parts[0], "x"), psi.xgrid.point(i), pf, i);
        psi.values[i] = cplx(parse_double(parts[1], "re"), parse_double(parts[2], "im"));
    }
    psi.validate();
    return psi;
}

PhaseCurve read_phase_curve(const std::string& path) {
    const ParsedFile pf = parse_file(path);
    expect_kind(pf, FieldKind::phase_curve);
    const auto parts = split(require(pf, "tgrid"));
    if (parts.size() != 3) throw ValidationError(path + ": 'tgrid' needs first,last,n");
    const std::size_t n = parse_size(parts[2], "tgrid");
    check_record_count(pf, n);
    PhaseCurve curve;
    curve.t.resize(n);
    curve.phi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto rec = record_fields(pf, i, 2);
        curve.t[i] = parse_double(rec[0], "t");
        curve.phi[i] = parse_double(rec[1], "phi");
        if (i > 0 && !(curve.t[i] > curve.t[i - 1]))
            throw ValidationError(path + ": knots must increase strictly");
    }
    check_coordinate(curve.t.front(), parse_double(parts[0], "tgrid"), pf, 0);
    check_coordinate(curve.t.back(), parse_double(parts[1], "tgrid"), pf, n - 1);
    return curve;
}

} // namespace liouspace
