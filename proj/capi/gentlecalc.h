/* C interface to the gentle-algebra calculus library.
 *
 * All computations run through opaque presentation handles; reports come
 * back as malloc'd strings owned by the caller (release with
 * gc_string_free). Errors are status codes; gc_last_error() returns a
 * message for the most recent failure on the calling thread.
 */
#ifndef GENTLECALC_H
#define GENTLECALC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gc_presentation gc_presentation;

typedef enum {
    GC_OK = 0,
    GC_ERR_PARSE = 1,      /* malformed input text */
    GC_ERR_BADARG = 2,     /* invalid configuration or unknown command */
    GC_ERR_VERIFY = 3,     /* `verify` found a mathematical inconsistency */
    GC_ERR_UNSUPPORTED = 4,/* operation not defined for this presentation */
    GC_ERR_INTERNAL = 5
} gc_status;

typedef struct {
    unsigned long characteristic; /* 0 or a prime */
    int bound;                    /* truncation bound, >= 2 */
    int max_degree;               /* top (co)homological degree in reports */
    const char* tree;             /* spanning-tree override, arrow names, or NULL */
    int structured;               /* nonzero: JSON output */
    const char* matrix_dump_dir;  /* optional directory for matrix dumps */
    const char* diagram_out;      /* optional path for the surface diagram */
    /* verify on random fd-gentle presentations (command "verify" with no
     * presentation handle): */
    int random_count;
    unsigned long long seed;
    int random_vertices;
    int random_arrows;
} gc_options;

/* fills in the documented defaults: char 0, bound 8, max_degree 4 */
void gc_options_init(gc_options* opts);

gc_status gc_parse(const char* source, gc_presentation** out);
gc_status gc_parse_file(const char* path, gc_presentation** out);
void gc_free(gc_presentation* p);

/* commands: validate sets circuits hh homology cyclic cup cap bracket
 * presentation surface invariants verify */
gc_status gc_report(const gc_presentation* p, const char* command, const gc_options* opts,
                    char** out_report);

/* verify over `random_count` generated fd-gentle presentations */
gc_status gc_random_verify(const gc_options* opts, char** out_report);

void gc_string_free(char* s);
const char* gc_last_error(void);
const char* gc_version(void);

/* parse-error position of the last GC_ERR_PARSE (0 when unknown) */
int gc_last_error_line(void);
int gc_last_error_column(void);

#ifdef __cplusplus
}
#endif

#endif /* GENTLECALC_H */
