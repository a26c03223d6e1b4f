// Named verification cases and convergence-study drivers shared by the
// command-line tool and the acceptance suite.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fsr {

struct CaseConfig {
    std::string case_tag; // burgers-steady | cubic-steady | euler1d-steady |
                          // euler1d-acoustic | euler2d-steady | euler2d-vortex
    std::string scheme = "fsr3";
    std::vector<int> grids;        // empty -> per-case default list
    std::string grid_family = "";  // 2D: quad | right-tri | equilateral-tri | irregular-tri
    bool dissipation = true;
    double cfl = 0.99;
    double drop = 0.0;   // 0 -> per-case default (1e-7 in 1D, 1e-8 in 2D)
    double dt = 0.0;     // unsteady step; 0 -> per-case default
    long steps = 0;      // unsteady step count; 0 -> per-case default
    long max_iter = 0;   // 0 -> 500*n (1D) or 2000*n (2D)
    double aspect = 1.0; // quad-grid y scale
    double entropy_fix = 0.0; // Harten eigenvalue-floor scale (Euler cases)
    std::uint64_t seed = 1;
    std::string out_dir = "";   // empty -> no files written
    bool plot = false;
    int threads = 0; // 0 -> all available (capped by FSR_THREADS)

    static const std::vector<std::string>& case_names();
};

struct StudyRow {
    int grid = 0;
    double h = 0.0;
    double error = 0.0;
    double observed_order = 0.0; // nan in the first row
    long iterations = 0;
    double wall_seconds = 0.0;
};

struct StudyResult {
    std::vector<StudyRow> rows;
    std::string csv_path; // empty when not written
    double final_order() const;
};

/// Build/solve/measure over the configured grid list; writes
/// convergence.csv under out_dir when set. Throws InvalidParameter for bad
/// configurations and SolverDivergence when a solve fails.
StudyResult run_case(const CaseConfig& cfg);

/// Truncation-error probe (no solving): injects the exact solution and
/// measures the interior residual norm per grid; writes te.csv. Steady
/// cases only; the 1D scalar cases run in extended precision.
StudyResult run_te_probe(const CaseConfig& cfg);

} // namespace fsr
