#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardy/core.hpp"

namespace hardy {

inline constexpr const char* kVersion = "0.1.0";

/// One resolved invocation.  Exit codes: 0 success, 1 failed verification
/// contract, 2 usage error (usage errors never produce partial reports).
struct RunConfig {
    std::string command;  // verify | probe | classify | factorize | ode | battery
    std::string suite = "all";
    std::string symbol;       // named generator
    std::string symbol_file;  // or a series file
    std::string input;        // factorize / ode input path
    std::string config_path;  // battery config file
    std::string out;          // report path ("" = summary only)
    std::string angles_csv;   // optional per-angle profile (classify)
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    Index degree = 256;
    Index samples = 2048;
    double tol = 1e-12;
    double p = 2, q = 2;
    Index n = 1;
    std::vector<double> a_re, a_im;
};

int run(const RunConfig& config);

int cli_main(int argc, char** argv);

}  // namespace hardy
