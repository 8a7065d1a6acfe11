/* halintd - width-3 tree decompositions of Halin graphs.
 *
 * C interface of libhalintd. All objects are opaque handles created and
 * released through these functions; every fallible call returns a
 * halin_status, with results written through out-parameters that are left
 * null on failure. halin_last_error() describes the most recent failure on
 * the calling thread. Vertex ids are 1-based on this surface, matching the
 * .gr/.td/.halin file formats.
 */
#ifndef HALINTD_H
#define HALINTD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum halin_status {
    HALIN_OK = 0,
    HALIN_ERR_INVALID_ARGUMENT = 1,
    HALIN_ERR_PARSE = 2,
    HALIN_ERR_IO = 3,
    HALIN_ERR_NOT_HALIN = 4,
    HALIN_ERR_STRUCTURE = 5, /* annotation fails verification */
    HALIN_ERR_LIMIT = 6,     /* oracle size limit exceeded */
    HALIN_ERR_INTERNAL = 7
} halin_status;

typedef struct halin_graph halin_graph;
typedef struct halin_annotation halin_annotation;
typedef struct halin_structure halin_structure;
typedef struct halin_order halin_order;
typedef struct halin_treedec halin_treedec;
typedef struct halin_validation halin_validation;

const char* halin_version(void);
const char* halin_status_name(halin_status s);
/* Message for the last failing call on this thread; empty string if none. */
const char* halin_last_error(void);
/* Frees any char* returned through an out-parameter. */
void halin_string_free(char* s);

/* ---- graphs (.gr) ---- */
halin_status halin_graph_build(int64_t n, const int64_t* edge_pairs, size_t num_edges,
                               halin_graph** out);
halin_status halin_graph_parse_gr(const char* text, halin_graph** out);
halin_status halin_graph_read_gr(const char* path, halin_graph** out);
halin_status halin_graph_write_gr(const halin_graph* g, char** out_text);
halin_status halin_graph_write_gr_file(const halin_graph* g, const char* path);
int64_t halin_graph_n(const halin_graph* g);
int64_t halin_graph_m(const halin_graph* g);
void halin_graph_free(halin_graph* g);

/* ---- annotations (.halin sidecars) ---- */
halin_status halin_annotation_parse(const char* text, halin_annotation** out);
halin_status halin_annotation_read(const char* path, halin_annotation** out);
halin_status halin_annotation_write(const halin_annotation* a, char** out_text);
halin_status halin_annotation_write_file(const halin_annotation* a, const char* path);
int64_t halin_annotation_root(const halin_annotation* a);
/* Returns 1 and fills *out when the annotation records a generator seed. */
int halin_annotation_seed(const halin_annotation* a, uint64_t* out);
void halin_annotation_free(halin_annotation* a);

/* ---- generator ---- */
halin_status halin_generate(uint64_t n_min, uint64_t n_max, uint64_t seed,
                            halin_graph** out_graph, halin_annotation** out_annotation);

/* ---- recognition / verification ---- */
halin_status halin_verify_structure(const halin_graph* g, const halin_annotation* a,
                                    halin_structure** out);
/* HALIN_ERR_NOT_HALIN when the graph has no Halin structure. */
halin_status halin_recognize(const halin_graph* g, halin_structure** out);
halin_status halin_structure_annotation(const halin_structure* s, halin_annotation** out);
int64_t halin_structure_leaf_count(const halin_structure* s);
void halin_structure_free(halin_structure* s);

/* ---- adjacency order ---- */
halin_status halin_compute_order(const halin_structure* s, halin_order** out);
int64_t halin_order_root(const halin_order* o);
void halin_order_free(halin_order* o);

/* ---- decomposition ---- */
halin_status halin_decompose(const halin_order* o, halin_treedec** out);
/* Convenience driver: verify the annotation when given, else recognize. */
halin_status halin_htd(const halin_graph* g, const halin_annotation* a_or_null,
                       halin_treedec** out);

/* ---- tree decompositions (.td) ---- */
halin_status halin_treedec_parse_td(const char* text, halin_treedec** out);
halin_status halin_treedec_read_td(const char* path, halin_treedec** out);
halin_status halin_treedec_write_td(const halin_treedec* td, int64_t n, char** out_text);
halin_status halin_treedec_write_td_file(const halin_treedec* td, int64_t n, const char* path);
int64_t halin_treedec_node_count(const halin_treedec* td);
int halin_treedec_width(const halin_treedec* td);
void halin_treedec_free(halin_treedec* td);

/* ---- validation ---- */
halin_status halin_validate(const halin_graph* g, const halin_treedec* td,
                            halin_validation** out);
int halin_validation_accepted(const halin_validation* v);
int halin_validation_width(const halin_validation* v);
halin_status halin_validation_format(const halin_validation* v, char** out_text);
void halin_validation_free(halin_validation* v);

/* ---- exact treewidth oracle ---- */
halin_status halin_exact_treewidth(const halin_graph* g, int limit, int* out_width,
                                   halin_treedec** out_witness_or_null);

#ifdef __cplusplus
}
#endif

#endif /* HALINTD_H */
