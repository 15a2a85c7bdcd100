#pragma once

#include "nt/lfunc.hpp"
#include "nt/report.hpp"

namespace nt {

struct SuiteParams {
    i64 q_max = 0;         // 0 = suite default
    i64 p = 0;             // restrict to one prime where meaningful
    int beta = 0;          // restrict to one exponent where meaningful
    i64 sample = 200;      // sample size for sampled sweeps
    u64 seed = 20250810;   // RNG seed for sampled sweeps
    double tol_scale = 1.0;
    double T = 10.0;       // moment experiment
    double step = 0.25;
    double cmax = 0.0;     // AFE c-truncation override (0 = 50 sqrt n)
    std::string fixture_dir;  // where regression fixtures live
};

const std::vector<std::string>& suite_names();
SweepReport run_suite(const std::string& name, const SuiteParams& P);

// regenerate all regression fixtures under dir
void refresh_fixtures(const std::string& dir);

// CSV exports (external interfaces)
std::string moment_csv(const std::vector<MomentReport>& rows);
std::string exponent_csv(int beta_max);
json moment_to_json(const MomentReport& r);

}  // namespace nt
