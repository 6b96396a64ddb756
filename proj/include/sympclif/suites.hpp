#pragma once

#include "sympclif/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sympclif {

// Shared knobs for suite runs and the CLI.  Dimensions are exact values; the
// *_max fields bound the sweeps a suite performs around them.  Caps guard
// against accidentally huge exact computations and can be raised explicitly.
struct RunConfig {
    int n = 2;               // number of (x, y, q) index slots
    int m = 4;               // Clifford dimension (even)
    int ell = 4;             // homogeneity degree
    int j = 1;               // preferred index
    int k = 1;               // deformation index
    int a_max = 6;           // power-sweep bound
    int k_max = 2;           // deformation-sweep bound
    int p_max = 8;           // coefficient-table bound
    int trials = 5;          // randomized cases per cell
    std::uint64_t seed = 0;  // master seed
    Rational alpha = 0;      // deformation parameter for single-operator runs
    int max_ell = 12;        // cap on ell
    int max_n = 4;           // cap on n
    int max_m = 8;           // cap on m
    bool parallel = false;   // fan independent cases across threads
};

struct CaseResult {
    json inputs;
    bool pass = false;
    json witness;  // null unless there is something to report
};

struct SuiteReport {
    std::string suite;
    json params;
    std::vector<CaseResult> cases;
    bool all_pass = false;

    json to_json() const;
};

// The identity suites exposed through the CLI, in canonical order.
const std::vector<std::string>& suite_names();

// Validates cfg against its caps (throws std::invalid_argument) and runs the
// named suite; throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace sympclif
