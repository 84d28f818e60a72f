#pragma once

#include "gentle/presentation.hpp"

#include <string>

namespace gentle {

struct RunConfig {
    std::string command;
    unsigned long characteristic = 0;
    int bound = 8;
    int max_degree = 4;
    std::string tree_override;   // comma/space separated arrow names
    bool structured = false;     // JSON instead of text
    std::string matrix_dump_dir; // when set: write differential matrices here
    std::string diagram_out;     // when set: write the surface diagram file here
    // verify on randomly generated fd-gentle presentations
    int random_count = 0;
    unsigned long long seed = 1;
    int random_vertices = 5;
    int random_arrows = 8;
};

struct RunResult {
    int exit_code = 0; // 0 ok, 2 configuration error, 3 verification mismatch
    std::string output;
};

// Runs one subcommand against a parsed presentation. Reports are
// byte-deterministic for a fixed configuration.
RunResult run_command(const GentlePresentation& p, const RunConfig& cfg);

// `verify --random N`: round-trips random fd-gentle presentations through
// the closed forms and the linear-algebra oracle.
RunResult run_random_verify(const RunConfig& cfg);

extern const char* const kSchemaVersion;

} // namespace gentle
