#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uin/certificate.hpp"
#include "uin/vecnorm.hpp"

namespace uin {

// Knobs shared by every verification suite. The seed fully determines each
// randomized sweep, so a report is reproducible byte for byte from
// (inputs, seed, version).
struct RunConfig {
    std::uint64_t seed = 12345;
    double tol = 1e-9;
    std::size_t samples = 0;  // 0 = suite default
    std::optional<SymmetricNorm> family;
    bool reference_examples = false;  // --paper-examples
    bool run_probe = false;
    std::size_t restarts = 10000;
};

struct SuiteReport {
    std::string suite;
    RunConfig cfg;
    std::vector<Certificate> certificates;
    bool all_hold = false;
};

inline constexpr const char* kVersion = "uinorms 0.1.0";

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);
nlohmann::json report_json(const SuiteReport& report);

// One line of the reference-example reproduction table; the run fails when
// any |expected - computed| exceeds 1e-9.
struct ExampleRow {
    std::string quantity;
    double expected = 0.0;
    double computed = 0.0;
    double delta() const;
};

std::vector<ExampleRow> reference_example_rows();

// The gauges a default report sweeps over. sandwich_families: the Ky Fan,
// lp and c-norm roster used by the sandwich/uniform sweeps.
// shipped_families: the named roster used for the submultiplicativity and
// algebra-norm dichotomies; the scaled-linf members realize f(e1) != 1 and
// the spectral gauge appears once, as cnorm(1,0,...,0).
std::vector<SymmetricNorm> sandwich_families();
std::vector<SymmetricNorm> shipped_families();

}  // namespace uin
