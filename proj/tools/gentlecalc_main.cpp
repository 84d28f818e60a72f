// Command-line front end; all computation goes through the shared C API.

#include "gentlecalc.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Tamarkin-Tsygan calculus of gentle algebras"};
    app.set_version_flag("--version", gc_version());

    std::string command, input, tree, format = "text", dump_dir, diagram;
    unsigned long characteristic = 0;
    int bound = 8, max_degree = 4;
    int random_count = 0, random_vertices = 5, random_arrows = 8;
    unsigned long long seed = 1;

    app.add_option("command", command,
                   "validate | sets | circuits | hh | homology | cyclic | cup | cap | "
                   "bracket | presentation | surface | invariants | verify")
        ->required();
    app.add_option("input", input, "presentation file (text grammar or JSON)");
    app.add_option("--char", characteristic, "field characteristic, 0 or a prime")
        ->capture_default_str();
    app.add_option("--bound", bound, "truncation bound for path enumeration")
        ->capture_default_str();
    app.add_option("--max-degree", max_degree, "top (co)homological degree")
        ->capture_default_str();
    app.add_option("--tree", tree, "spanning-tree override: comma/space separated arrow names");
    app.add_option("--format", format, "text | structured")->capture_default_str();
    app.add_option("--dump-matrices", dump_dir, "write differential matrices to this directory");
    app.add_option("--diagram", diagram, "write the surface diagram description to this file");
    app.add_option("--random", random_count, "verify: run on N random fd-gentle presentations");
    app.add_option("--seed", seed, "seed for --random")->capture_default_str();
    app.add_option("--random-vertices", random_vertices, "max vertices for --random")
        ->capture_default_str();
    app.add_option("--random-arrows", random_arrows, "max arrows for --random")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }
    if (format != "text" && format != "structured") {
        std::fprintf(stderr, "error: --format must be text or structured\n");
        return 2;
    }

    gc_options opts;
    gc_options_init(&opts);
    opts.characteristic = characteristic;
    opts.bound = bound;
    opts.max_degree = max_degree;
    if (!tree.empty()) opts.tree = tree.c_str();
    opts.structured = format == "structured";
    if (!dump_dir.empty()) opts.matrix_dump_dir = dump_dir.c_str();
    if (!diagram.empty()) opts.diagram_out = diagram.c_str();
    opts.random_count = random_count;
    opts.seed = seed;
    opts.random_vertices = random_vertices;
    opts.random_arrows = random_arrows;

    char* report = nullptr;
    gc_status st;
    if (command == "verify" && random_count > 0 && input.empty()) {
        st = gc_random_verify(&opts, &report);
    } else {
        if (input.empty()) {
            std::fprintf(stderr, "error: a presentation file is required\n");
            return 2;
        }
        gc_presentation* p = nullptr;
        st = gc_parse_file(input.c_str(), &p);
        if (st != GC_OK) {
            if (gc_last_error_line() > 0)
                std::fprintf(stderr, "%s:%d:%d: error: %s\n", input.c_str(),
                             gc_last_error_line(), gc_last_error_column(), gc_last_error());
            else
                std::fprintf(stderr, "%s: error: %s\n", input.c_str(), gc_last_error());
            return 2;
        }
        st = gc_report(p, command.c_str(), &opts, &report);
        gc_free(p);
    }

    if (report) {
        std::fputs(report, stdout);
        gc_string_free(report);
    }
    switch (st) {
    case GC_OK: return 0;
    case GC_ERR_VERIFY: return 3;
    case GC_ERR_PARSE:
        std::fprintf(stderr, "error: %s\n", gc_last_error());
        return 2;
    default:
        std::fprintf(stderr, "error: %s\n", gc_last_error());
        return 2;
    }
}
