#include "gentlecalc.h"

#include "gentle/presentation.hpp"
#include "gentle/report.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;
thread_local int g_error_col = 0;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gentle::RunConfig to_config(const char* command, const gc_options* opts) {
    gentle::RunConfig cfg;
    if (command) cfg.command = command;
    if (opts) {
        cfg.characteristic = opts->characteristic;
        cfg.bound = opts->bound;
        cfg.max_degree = opts->max_degree;
        if (opts->tree) cfg.tree_override = opts->tree;
        cfg.structured = opts->structured != 0;
        if (opts->matrix_dump_dir) cfg.matrix_dump_dir = opts->matrix_dump_dir;
        if (opts->diagram_out) cfg.diagram_out = opts->diagram_out;
        cfg.random_count = opts->random_count;
        cfg.seed = opts->seed;
        cfg.random_vertices = opts->random_vertices;
        cfg.random_arrows = opts->random_arrows;
    }
    return cfg;
}

} // namespace

struct gc_presentation {
    gentle::GentlePresentation impl;
};

extern "C" {

void gc_options_init(gc_options* opts) {
    if (!opts) return;
    std::memset(opts, 0, sizeof(*opts));
    opts->characteristic = 0;
    opts->bound = 8;
    opts->max_degree = 4;
    opts->seed = 1;
    opts->random_vertices = 5;
    opts->random_arrows = 8;
}

gc_status gc_parse(const char* source, gc_presentation** out) {
    if (!source || !out) {
        g_error = "null argument";
        return GC_ERR_BADARG;
    }
    *out = nullptr;
    g_error_line = g_error_col = 0;
    try {
        *out = new gc_presentation{gentle::parse_presentation(source)};
        return GC_OK;
    } catch (const gentle::ParseError& e) {
        g_error = e.message;
        g_error_line = e.line;
        g_error_col = e.column;
        return GC_ERR_PARSE;
    } catch (const std::exception& e) {
        g_error = e.what();
        return GC_ERR_PARSE;
    }
}

gc_status gc_parse_file(const char* path, gc_presentation** out) {
    if (!path || !out) {
        g_error = "null argument";
        return GC_ERR_BADARG;
    }
    std::ifstream is(path);
    if (!is) {
        g_error = std::string("cannot open '") + path + "'";
        return GC_ERR_PARSE;
    }
    std::ostringstream buf;
    buf << is.rdbuf();
    return gc_parse(buf.str().c_str(), out);
}

void gc_free(gc_presentation* p) { delete p; }

gc_status gc_report(const gc_presentation* p, const char* command, const gc_options* opts,
                    char** out_report) {
    if (!p || !command || !out_report) {
        g_error = "null argument";
        return GC_ERR_BADARG;
    }
    *out_report = nullptr;
    try {
        gentle::RunResult r = gentle::run_command(p->impl, to_config(command, opts));
        *out_report = dup_string(r.output);
        if (r.exit_code == 3) return GC_ERR_VERIFY;
        return GC_OK;
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return GC_ERR_BADARG;
    } catch (const std::exception& e) {
        g_error = e.what();
        return GC_ERR_INTERNAL;
    }
}

gc_status gc_random_verify(const gc_options* opts, char** out_report) {
    if (!out_report) {
        g_error = "null argument";
        return GC_ERR_BADARG;
    }
    *out_report = nullptr;
    try {
        gentle::RunConfig cfg = to_config("verify", opts);
        gentle::RunResult r = gentle::run_random_verify(cfg);
        *out_report = dup_string(r.output);
        if (r.exit_code == 3) return GC_ERR_VERIFY;
        return GC_OK;
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return GC_ERR_BADARG;
    } catch (const std::exception& e) {
        g_error = e.what();
        return GC_ERR_INTERNAL;
    }
}

void gc_string_free(char* s) { std::free(s); }

const char* gc_last_error(void) { return g_error.c_str(); }
int gc_last_error_line(void) { return g_error_line; }
int gc_last_error_column(void) { return g_error_col; }

const char* gc_version(void) { return "1.0.0"; }

} // extern "C"
