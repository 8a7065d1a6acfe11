#include "halintd.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "decomposer.hpp"
#include "generator.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "ordering.hpp"
#include "pace_io.hpp"
#include "recognizer.hpp"
#include "tree_decomposition.hpp"
#include "validator.hpp"

// Handles keep shared ownership of what they reference, so freeing a graph
// before a structure derived from it stays safe.
struct halin_graph {
    std::shared_ptr<const halin::Graph> g;
};
struct halin_annotation {
    halin::HalinAnnotation a;
};
struct halin_structure {
    std::shared_ptr<const halin::Graph> g;
    std::shared_ptr<const halin::HalinStructure> s;
};
struct halin_order {
    std::shared_ptr<const halin::Graph> g;
    std::shared_ptr<const halin::HalinStructure> s;
    std::shared_ptr<const halin::OrderedHalin> o;
};
struct halin_treedec {
    halin::TreeDecomposition td;
};
struct halin_validation {
    halin::ValidationReport rep;
};

namespace {

thread_local std::string g_last_error;

halin_status fail(halin_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

halin_status ok() {
    g_last_error.clear();
    return HALIN_OK;
}

// Runs `fn`, translating exceptions into statuses.
template <typename Fn>
halin_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const halin::ParseError& e) {
        return fail(HALIN_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HALIN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HALIN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HALIN_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename T>
halin_status require(const T* p, const char* what) {
    if (!p) return fail(HALIN_ERR_INVALID_ARGUMENT, std::string("null ") + what);
    return HALIN_OK;
}

}  // namespace

extern "C" {

const char* halin_version(void) { return "1.0.0"; }

const char* halin_status_name(halin_status s) {
    switch (s) {
        case HALIN_OK: return "ok";
        case HALIN_ERR_INVALID_ARGUMENT: return "invalid argument";
        case HALIN_ERR_PARSE: return "parse error";
        case HALIN_ERR_IO: return "i/o error";
        case HALIN_ERR_NOT_HALIN: return "not a Halin graph";
        case HALIN_ERR_STRUCTURE: return "structure verification failed";
        case HALIN_ERR_LIMIT: return "size limit exceeded";
        case HALIN_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* halin_last_error(void) { return g_last_error.c_str(); }

void halin_string_free(char* s) { delete[] s; }

halin_status halin_graph_build(int64_t n, const int64_t* edge_pairs, size_t num_edges,
                               halin_graph** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (num_edges > 0 && !edge_pairs)
        return fail(HALIN_ERR_INVALID_ARGUMENT, "null edge array");
    return guarded([&] {
        if (n < 0 || n > INT32_MAX)
            return fail(HALIN_ERR_INVALID_ARGUMENT, "vertex count out of range");
        std::vector<halin::Edge> edges;
        edges.reserve(num_edges);
        for (size_t i = 0; i < num_edges; ++i) {
            int64_t u = edge_pairs[2 * i], v = edge_pairs[2 * i + 1];
            if (u < 1 || u > n || v < 1 || v > n)
                return fail(HALIN_ERR_INVALID_ARGUMENT,
                            "edge endpoint out of [1, " + std::to_string(n) + "]");
            edges.emplace_back(static_cast<halin::Vertex>(u - 1),
                               static_cast<halin::Vertex>(v - 1));
        }
        auto g = std::make_shared<halin::Graph>(
            halin::Graph::build(static_cast<halin::Vertex>(n), edges));
        *out = new halin_graph{std::move(g)};
        return ok();
    });
}

halin_status halin_graph_parse_gr(const char* text, halin_graph** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(text, "text")) return s;
    return guarded([&] {
        auto g = std::make_shared<halin::Graph>(halin::parse_gr(text));
        *out = new halin_graph{std::move(g)};
        return ok();
    });
}

halin_status halin_graph_read_gr(const char* path, halin_graph** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(path, "path")) return s;
    return guarded([&]() -> halin_status {
        std::string text;
        try {
            text = halin::read_file(path);
        } catch (const halin::ParseError& e) {
            return fail(HALIN_ERR_IO, e.what());
        }
        auto g = std::make_shared<halin::Graph>(halin::parse_gr(text));
        *out = new halin_graph{std::move(g)};
        return ok();
    });
}

halin_status halin_graph_write_gr(const halin_graph* g, char** out_text) {
    if (auto s = require(out_text, "output pointer")) return s;
    *out_text = nullptr;
    if (auto s = require(g, "graph")) return s;
    return guarded([&] {
        *out_text = dup_string(halin::write_gr(*g->g));
        return ok();
    });
}

halin_status halin_graph_write_gr_file(const halin_graph* g, const char* path) {
    if (auto s = require(g, "graph")) return s;
    if (auto s = require(path, "path")) return s;
    return guarded([&]() -> halin_status {
        try {
            halin::write_file(path, halin::write_gr(*g->g));
        } catch (const halin::ParseError& e) {
            return fail(HALIN_ERR_IO, e.what());
        }
        return ok();
    });
}

int64_t halin_graph_n(const halin_graph* g) { return g ? g->g->n() : -1; }
int64_t halin_graph_m(const halin_graph* g) { return g ? g->g->m() : -1; }
void halin_graph_free(halin_graph* g) { delete g; }

halin_status halin_annotation_parse(const char* text, halin_annotation** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(text, "text")) return s;
    return guarded([&] {
        *out = new halin_annotation{halin::parse_annotation(text)};
        return ok();
    });
}

halin_status halin_annotation_read(const char* path, halin_annotation** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(path, "path")) return s;
    return guarded([&]() -> halin_status {
        std::string text;
        try {
            text = halin::read_file(path);
        } catch (const halin::ParseError& e) {
            return fail(HALIN_ERR_IO, e.what());
        }
        *out = new halin_annotation{halin::parse_annotation(text)};
        return ok();
    });
}

halin_status halin_annotation_write(const halin_annotation* a, char** out_text) {
    if (auto s = require(out_text, "output pointer")) return s;
    *out_text = nullptr;
    if (auto s = require(a, "annotation")) return s;
    return guarded([&] {
        *out_text = dup_string(halin::write_annotation(a->a));
        return ok();
    });
}

halin_status halin_annotation_write_file(const halin_annotation* a, const char* path) {
    if (auto s = require(a, "annotation")) return s;
    if (auto s = require(path, "path")) return s;
    return guarded([&]() -> halin_status {
        try {
            halin::write_file(path, halin::write_annotation(a->a));
        } catch (const halin::ParseError& e) {
            return fail(HALIN_ERR_IO, e.what());
        }
        return ok();
    });
}

int64_t halin_annotation_root(const halin_annotation* a) { return a ? a->a.root + 1 : -1; }

int halin_annotation_seed(const halin_annotation* a, uint64_t* out) {
    if (!a || !a->a.seed) return 0;
    if (out) *out = *a->a.seed;
    return 1;
}

void halin_annotation_free(halin_annotation* a) { delete a; }

halin_status halin_generate(uint64_t n_min, uint64_t n_max, uint64_t seed,
                            halin_graph** out_graph, halin_annotation** out_annotation) {
    if (auto s = require(out_graph, "output pointer")) return s;
    if (auto s = require(out_annotation, "output pointer")) return s;
    *out_graph = nullptr;
    *out_annotation = nullptr;
    return guarded([&] {
        halin::GenResult r = halin::generate_halin({n_min, n_max, seed});
        *out_graph = new halin_graph{std::make_shared<halin::Graph>(std::move(r.graph))};
        *out_annotation = new halin_annotation{std::move(r.annotation)};
        return ok();
    });
}

halin_status halin_verify_structure(const halin_graph* g, const halin_annotation* a,
                                    halin_structure** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(g, "graph")) return s;
    if (auto s = require(a, "annotation")) return s;
    return guarded([&]() -> halin_status {
        halin::VerifyResult vr = halin::verify_structure(*g->g, a->a);
        if (!vr.ok())
            return fail(HALIN_ERR_STRUCTURE,
                        std::string(halin::to_string(*vr.error)) + ": " + vr.detail);
        *out = new halin_structure{
            g->g, std::make_shared<halin::HalinStructure>(std::move(*vr.structure))};
        return ok();
    });
}

halin_status halin_recognize(const halin_graph* g, halin_structure** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(g, "graph")) return s;
    return guarded([&]() -> halin_status {
        auto found = halin::recognize(*g->g);
        if (!found) return fail(HALIN_ERR_NOT_HALIN, "input graph is not a Halin graph");
        *out = new halin_structure{g->g,
                                   std::make_shared<halin::HalinStructure>(std::move(*found))};
        return ok();
    });
}

halin_status halin_structure_annotation(const halin_structure* s, halin_annotation** out) {
    if (auto st = require(out, "output pointer")) return st;
    *out = nullptr;
    if (auto st = require(s, "structure")) return st;
    return guarded([&] {
        *out = new halin_annotation{s->s->annotation(halin::select_root(*s->s))};
        return ok();
    });
}

int64_t halin_structure_leaf_count(const halin_structure* s) {
    return s ? s->s->leaf_count() : -1;
}

void halin_structure_free(halin_structure* s) { delete s; }

halin_status halin_compute_order(const halin_structure* s, halin_order** out) {
    if (auto st = require(out, "output pointer")) return st;
    *out = nullptr;
    if (auto st = require(s, "structure")) return st;
    return guarded([&]() -> halin_status {
        halin::Vertex root = halin::select_root(*s->s);
        halin::OrderResult r = halin::compute_order(*s->s, root);
        if (!r.ok()) return fail(HALIN_ERR_STRUCTURE, "ORDER_NOT_REALIZABLE: " + r.detail);
        auto o = std::make_shared<halin::OrderedHalin>(std::move(*r.order));
        *out = new halin_order{s->g, s->s, std::move(o)};
        return ok();
    });
}

int64_t halin_order_root(const halin_order* o) { return o ? o->o->root + 1 : -1; }
void halin_order_free(halin_order* o) { delete o; }

halin_status halin_decompose(const halin_order* o, halin_treedec** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(o, "order")) return s;
    return guarded([&] {
        halin::AlmostHalinRef top{2, o->o->root, 1, o->o->children_count(o->o->root)};
        *out = new halin_treedec{halin::tree_decomp_ah(*o->o, top)};
        return ok();
    });
}

halin_status halin_htd(const halin_graph* g, const halin_annotation* a_or_null,
                       halin_treedec** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(g, "graph")) return s;
    return guarded([&]() -> halin_status {
        std::optional<halin::HalinAnnotation> a;
        if (a_or_null) a = a_or_null->a;
        auto result = halin::h_td(*g->g, a);
        if (auto* err = std::get_if<halin::HtdError>(&result))
            return fail(err->not_halin ? HALIN_ERR_NOT_HALIN : HALIN_ERR_STRUCTURE, err->detail);
        *out = new halin_treedec{std::get<halin::TreeDecomposition>(std::move(result))};
        return ok();
    });
}

halin_status halin_treedec_parse_td(const char* text, halin_treedec** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(text, "text")) return s;
    return guarded([&] {
        *out = new halin_treedec{halin::parse_td(text)};
        return ok();
    });
}

halin_status halin_treedec_read_td(const char* path, halin_treedec** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(path, "path")) return s;
    return guarded([&]() -> halin_status {
        std::string text;
        try {
            text = halin::read_file(path);
        } catch (const halin::ParseError& e) {
            return fail(HALIN_ERR_IO, e.what());
        }
        *out = new halin_treedec{halin::parse_td(text)};
        return ok();
    });
}

halin_status halin_treedec_write_td(const halin_treedec* td, int64_t n, char** out_text) {
    if (auto s = require(out_text, "output pointer")) return s;
    *out_text = nullptr;
    if (auto s = require(td, "tree decomposition")) return s;
    return guarded([&]() -> halin_status {
        if (n < 0 || n > INT32_MAX)
            return fail(HALIN_ERR_INVALID_ARGUMENT, "vertex count out of range");
        *out_text = dup_string(halin::write_td(td->td, static_cast<halin::Vertex>(n)));
        return ok();
    });
}

halin_status halin_treedec_write_td_file(const halin_treedec* td, int64_t n, const char* path) {
    if (auto s = require(td, "tree decomposition")) return s;
    if (auto s = require(path, "path")) return s;
    return guarded([&]() -> halin_status {
        if (n < 0 || n > INT32_MAX)
            return fail(HALIN_ERR_INVALID_ARGUMENT, "vertex count out of range");
        try {
            halin::write_file(path, halin::write_td(td->td, static_cast<halin::Vertex>(n)));
        } catch (const halin::ParseError& e) {
            return fail(HALIN_ERR_IO, e.what());
        }
        return ok();
    });
}

int64_t halin_treedec_node_count(const halin_treedec* td) {
    return td ? td->td.node_count() : -1;
}

int halin_treedec_width(const halin_treedec* td) { return td ? td->td.width() : -2; }

void halin_treedec_free(halin_treedec* td) { delete td; }

halin_status halin_validate(const halin_graph* g, const halin_treedec* td,
                            halin_validation** out) {
    if (auto s = require(out, "output pointer")) return s;
    *out = nullptr;
    if (auto s = require(g, "graph")) return s;
    if (auto s = require(td, "tree decomposition")) return s;
    return guarded([&] {
        *out = new halin_validation{halin::validate(*g->g, td->td)};
        return ok();
    });
}

int halin_validation_accepted(const halin_validation* v) {
    return v && v->rep.accepted() ? 1 : 0;
}

int halin_validation_width(const halin_validation* v) { return v ? v->rep.width : -2; }

halin_status halin_validation_format(const halin_validation* v, char** out_text) {
    if (auto s = require(out_text, "output pointer")) return s;
    *out_text = nullptr;
    if (auto s = require(v, "validation")) return s;
    return guarded([&] {
        *out_text = dup_string(v->rep.format());
        return ok();
    });
}

void halin_validation_free(halin_validation* v) { delete v; }

halin_status halin_exact_treewidth(const halin_graph* g, int limit, int* out_width,
                                   halin_treedec** out_witness_or_null) {
    if (auto s = require(out_width, "output pointer")) return s;
    if (out_witness_or_null) *out_witness_or_null = nullptr;
    if (auto s = require(g, "graph")) return s;
    return guarded([&]() -> halin_status {
        if (g->g->n() > limit)
            return fail(HALIN_ERR_LIMIT, "graph has " + std::to_string(g->g->n()) +
                                             " vertices, above the limit of " +
                                             std::to_string(limit));
        halin::OracleResult r = halin::exact_treewidth(*g->g, limit);
        *out_width = r.width;
        if (out_witness_or_null) *out_witness_or_null = new halin_treedec{std::move(r.witness)};
        return ok();
    });
}

}  // extern "C"
