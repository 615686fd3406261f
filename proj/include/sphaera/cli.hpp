#pragma once

#include <string>
#include <vector>

namespace sphaera {

struct Config {
    double float_tolerance = 1e-9;
    long rational_snap_denominator_bound = 1000000;
    std::string cache_dir;
    std::string output_format = "json";
    bool use_cache = true;
};

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

// args excludes the program name. Environment overrides use the SPHAERA_ prefix.
CliResult run_cli(const std::vector<std::string>& args);

std::string default_cache_dir();
double parse_radians(const std::string& text);

}  // namespace sphaera
