#pragma once
#include <string>
#include <vector>

namespace liouspace::verify {

// One measured quantity compared against a pinned tolerance. cmp is the
// direction of the requirement: le for "measured <= tolerance", ge for
// checks that must stay large (e.g. a deliberately wrong variant must
// disagree with the quadrature oracle).
struct Check {
    std::string id;    // "A4.fd_ratio" etc.
    std::string suite; // liouville|vonneumann|schrodinger|roundtrip|negativity|greens
    double measured = 0.0;
    double tolerance = 0.0;
    enum class Cmp { le, ge } cmp = Cmp::le;
    bool pass = false;
};

const std::vector<std::string>& suite_names(); // without "all"

// suite may be any name from suite_names() or "all".
std::vector<Check> run_suite(const std::string& suite);

struct CriterionResult {
    std::string id; // "A1".."A11"
    std::string title;
    bool pass = false;
    std::string detail; // worst sub-check summary
};

std::vector<CriterionResult> run_acceptance();

} // namespace liouspace::verify
