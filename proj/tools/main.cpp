// halin-td: command-line front end over libhalintd's C API.
//
// Exit codes: 0 success / accept / Halin; 1 usage error; 2 negative result
// (not Halin, validation reject, oracle limit); 3 I/O or parse error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "halintd.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;
constexpr int kExitIo = 3;

int exit_code_for(halin_status s) {
    switch (s) {
        case HALIN_OK: return kExitOk;
        case HALIN_ERR_NOT_HALIN:
        case HALIN_ERR_STRUCTURE:
        case HALIN_ERR_LIMIT: return kExitNegative;
        case HALIN_ERR_IO:
        case HALIN_ERR_PARSE: return kExitIo;
        default: return kExitUsage;
    }
}

int complain(halin_status s) {
    std::cerr << "error: " << halin_status_name(s) << ": " << halin_last_error() << "\n";
    return exit_code_for(s);
}

// RAII wrappers over the C handles.
template <typename T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    explicit Handle(T* p) : ptr(p) {}
    ~Handle() { reset(); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    Handle& operator=(Handle&& o) noexcept {
        if (this != &o) {
            reset();
            ptr = o.ptr;
            o.ptr = nullptr;
        }
        return *this;
    }
    void reset() {
        if (ptr) Free(ptr);
        ptr = nullptr;
    }
    T** out() {
        reset();
        return &ptr;
    }
    explicit operator bool() const { return ptr != nullptr; }
};

using GraphHandle = Handle<halin_graph, halin_graph_free>;
using AnnotationHandle = Handle<halin_annotation, halin_annotation_free>;
using StructureHandle = Handle<halin_structure, halin_structure_free>;
using OrderHandle = Handle<halin_order, halin_order_free>;
using TreedecHandle = Handle<halin_treedec, halin_treedec_free>;
using ValidationHandle = Handle<halin_validation, halin_validation_free>;

std::string owned_string(char* s) {
    std::string out = s ? s : "";
    halin_string_free(s);
    return out;
}

fs::path sidecar_path(const fs::path& gr_path) {
    fs::path p = gr_path;
    p.replace_extension(".halin");
    return p;
}

struct GroupRange {
    std::uint64_t n_min, n_max;
};

const std::map<std::string, GroupRange> kGroups = {
    {"small", {100, 999}},
    {"medium", {1000, 9999}},
    {"large", {10000, 99999}},
    {"giant", {100000, 999999}},
};

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t k = xs.size();
    if (k == 0) return -1;
    return k % 2 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

double mean(const std::vector<double>& xs) {
    if (xs.empty()) return -1;
    double s = 0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

// ---------------------------------------------------------------- generate

int cmd_generate(const std::string& group, int count, std::uint64_t seed,
                 const std::string& out_dir, std::optional<std::uint64_t> n_min_opt,
                 std::optional<std::uint64_t> n_max_opt) {
    GroupRange range = kGroups.at(group);
    if (n_min_opt) range.n_min = *n_min_opt;
    if (n_max_opt) range.n_max = *n_max_opt;

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
        return kExitIo;
    }
    for (int i = 0; i < count; ++i) {
        GraphHandle g;
        AnnotationHandle a;
        halin_status s = halin_generate(range.n_min, range.n_max, seed + static_cast<std::uint64_t>(i),
                                        g.out(), a.out());
        if (s != HALIN_OK) return complain(s);
        char name[64];
        std::snprintf(name, sizeof(name), "%s_%03d", group.c_str(), i);
        fs::path base = fs::path(out_dir) / name;
        fs::path gr = base;
        gr += ".gr";
        fs::path halin = base;
        halin += ".halin";
        if ((s = halin_graph_write_gr_file(g.ptr, gr.string().c_str())) != HALIN_OK)
            return complain(s);
        if ((s = halin_annotation_write_file(a.ptr, halin.string().c_str())) != HALIN_OK)
            return complain(s);
        std::cerr << "wrote " << gr.string() << " (n=" << halin_graph_n(g.ptr)
                  << ", m=" << halin_graph_m(g.ptr) << ")\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- recognize

int cmd_recognize(const std::string& input, bool emit_annotation) {
    GraphHandle g;
    halin_status s = halin_graph_read_gr(input.c_str(), g.out());
    if (s != HALIN_OK) return complain(s);
    StructureHandle st;
    s = halin_recognize(g.ptr, st.out());
    if (s == HALIN_ERR_NOT_HALIN) {
        std::cout << "not halin\n";
        return kExitNegative;
    }
    if (s != HALIN_OK) return complain(s);
    std::cout << "halin\n";
    if (emit_annotation) {
        AnnotationHandle a;
        if ((s = halin_structure_annotation(st.ptr, a.out())) != HALIN_OK) return complain(s);
        fs::path out = sidecar_path(input);
        if ((s = halin_annotation_write_file(a.ptr, out.string().c_str())) != HALIN_OK)
            return complain(s);
        std::cerr << "wrote " << out.string() << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- decompose

int cmd_decompose(const std::string& input, std::string annotation_path,
                  const std::string& output) {
    GraphHandle g;
    halin_status s = halin_graph_read_gr(input.c_str(), g.out());
    if (s != HALIN_OK) return complain(s);

    // A supplied or same-basename sidecar is preferred over recognition.
    AnnotationHandle a;
    if (annotation_path.empty()) {
        fs::path candidate = sidecar_path(input);
        std::error_code ec;
        if (fs::exists(candidate, ec)) annotation_path = candidate.string();
    }
    if (!annotation_path.empty()) {
        if ((s = halin_annotation_read(annotation_path.c_str(), a.out())) != HALIN_OK)
            return complain(s);
    }

    TreedecHandle td;
    if ((s = halin_htd(g.ptr, a.ptr, td.out())) != HALIN_OK) return complain(s);
    if ((s = halin_treedec_write_td_file(td.ptr, halin_graph_n(g.ptr), output.c_str())) != HALIN_OK)
        return complain(s);
    std::cerr << "width " << halin_treedec_width(td.ptr) << ", "
              << halin_treedec_node_count(td.ptr) << " bags -> " << output << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& graph_path, const std::string& td_path) {
    GraphHandle g;
    halin_status s = halin_graph_read_gr(graph_path.c_str(), g.out());
    if (s != HALIN_OK) return complain(s);
    TreedecHandle td;
    if ((s = halin_treedec_read_td(td_path.c_str(), td.out())) != HALIN_OK) return complain(s);
    ValidationHandle v;
    if ((s = halin_validate(g.ptr, td.ptr, v.out())) != HALIN_OK) return complain(s);
    char* text = nullptr;
    if ((s = halin_validation_format(v.ptr, &text)) != HALIN_OK) return complain(s);
    std::cout << owned_string(text);
    return halin_validation_accepted(v.ptr) ? kExitOk : kExitNegative;
}

// ------------------------------------------------------------------ oracle

int cmd_oracle(const std::string& graph_path, int limit, const std::string& witness_out) {
    GraphHandle g;
    halin_status s = halin_graph_read_gr(graph_path.c_str(), g.out());
    if (s != HALIN_OK) return complain(s);
    int width = -1;
    TreedecHandle witness;
    s = halin_exact_treewidth(g.ptr, limit, &width, witness_out.empty() ? nullptr : witness.out());
    if (s != HALIN_OK) return complain(s);
    std::cout << width << "\n";
    if (!witness_out.empty()) {
        if ((s = halin_treedec_write_td_file(witness.ptr, halin_graph_n(g.ptr),
                                             witness_out.c_str())) != HALIN_OK)
            return complain(s);
    }
    return kExitOk;
}

// ------------------------------------------------------------------- bench

struct BenchRow {
    std::string instance;
    std::string group;
    std::int64_t n = -1, m = -1;
    double t_recognize = -1, t_order = -1, t_decompose = -1, t_validate = -1;
    int width = -2;
    std::string verdict;
};

std::string classify_by_n(std::int64_t n) {
    if (n < 1000) return "small";
    if (n < 10000) return "medium";
    if (n < 100000) return "large";
    return "giant";
}

std::string group_of(const std::string& stem, std::int64_t n) {
    for (const auto& [name, range] : kGroups)
        if (stem.rfind(name + "_", 0) == 0) return name;
    return classify_by_n(n);
}

BenchRow bench_instance(const fs::path& gr_path, int repeats) {
    BenchRow row;
    row.instance = gr_path.stem().string();

    GraphHandle g;
    halin_status s = halin_graph_read_gr(gr_path.string().c_str(), g.out());
    if (s != HALIN_OK) {
        row.group = "small";
        row.verdict = std::string("error: ") + halin_status_name(s);
        return row;
    }
    row.n = halin_graph_n(g.ptr);
    row.m = halin_graph_m(g.ptr);
    row.group = group_of(row.instance, row.n);

    AnnotationHandle a;
    fs::path sidecar = sidecar_path(gr_path);
    std::error_code ec;
    if (fs::exists(sidecar, ec)) {
        if ((s = halin_annotation_read(sidecar.string().c_str(), a.out())) != HALIN_OK) {
            row.verdict = std::string("error: ") + halin_status_name(s);
            return row;
        }
    }

    std::vector<double> t_rec, t_ord, t_dec, t_val;
    for (int r = 0; r < repeats; ++r) {
        StructureHandle st;
        double t0 = now_ms();
        s = a ? halin_verify_structure(g.ptr, a.ptr, st.out()) : halin_recognize(g.ptr, st.out());
        double t1 = now_ms();
        if (s != HALIN_OK) {
            row.verdict = std::string("error: ") + halin_status_name(s);
            return row;
        }
        t_rec.push_back(t1 - t0);

        OrderHandle o;
        t0 = now_ms();
        s = halin_compute_order(st.ptr, o.out());
        t1 = now_ms();
        if (s != HALIN_OK) {
            row.verdict = std::string("error: ") + halin_status_name(s);
            return row;
        }
        t_ord.push_back(t1 - t0);

        TreedecHandle td;
        t0 = now_ms();
        s = halin_decompose(o.ptr, td.out());
        t1 = now_ms();
        if (s != HALIN_OK) {
            row.verdict = std::string("error: ") + halin_status_name(s);
            return row;
        }
        t_dec.push_back(t1 - t0);

        ValidationHandle v;
        t0 = now_ms();
        s = halin_validate(g.ptr, td.ptr, v.out());
        t1 = now_ms();
        if (s != HALIN_OK) {
            row.verdict = std::string("error: ") + halin_status_name(s);
            return row;
        }
        t_val.push_back(t1 - t0);

        row.width = halin_treedec_width(td.ptr);
        row.verdict = halin_validation_accepted(v.ptr) ? "accept" : "reject";
    }
    row.t_recognize = median(t_rec);
    row.t_order = median(t_ord);
    row.t_decompose = median(t_dec);
    row.t_validate = median(t_val);
    return row;
}

std::string format_ms(double v) {
    if (v < 0) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void emit_row(std::ostream& os, const BenchRow& r) {
    os << r.instance << ',' << r.group << ',';
    if (r.n >= 0) os << r.n;
    os << ',';
    if (r.m >= 0) os << r.m;
    os << ',' << format_ms(r.t_recognize) << ',' << format_ms(r.t_order) << ','
       << format_ms(r.t_decompose) << ',' << format_ms(r.t_validate) << ',';
    if (r.width >= -1) os << r.width;
    os << ',' << r.verdict << '\n';
}

int cmd_bench(const std::string& dir, int repeats, int jobs, const std::string& out_path) {
    std::vector<fs::path> inputs;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".gr")
            inputs.push_back(entry.path());
    }
    if (ec) {
        std::cerr << "error: cannot read directory " << dir << ": " << ec.message() << "\n";
        return kExitIo;
    }
    std::sort(inputs.begin(), inputs.end());

    std::vector<BenchRow> rows(inputs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i) rows[i] = bench_instance(inputs[i], repeats);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= inputs.size()) return;
                rows[i] = bench_instance(inputs[i], repeats);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitIo;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;

    os << "instance,group,n,m,t_recognize_ms,t_order_ms,t_decompose_ms,t_validate_ms,width,verdict\n";
    for (const BenchRow& r : rows) emit_row(os, r);

    // Per-group medians and means over clean rows.
    for (const char* group : {"small", "medium", "large", "giant"}) {
        std::vector<double> ns, ms, rec, ord, dec, val, widths;
        for (const BenchRow& r : rows) {
            if (r.group != group || r.t_validate < 0) continue;
            ns.push_back(static_cast<double>(r.n));
            ms.push_back(static_cast<double>(r.m));
            rec.push_back(r.t_recognize);
            ord.push_back(r.t_order);
            dec.push_back(r.t_decompose);
            val.push_back(r.t_validate);
            widths.push_back(r.width);
        }
        if (ns.empty()) continue;
        auto emit_summary = [&](const char* tag, auto fold) {
            BenchRow s;
            s.instance = std::string(group) + ":" + tag;
            s.group = group;
            s.n = static_cast<std::int64_t>(fold(ns));
            s.m = static_cast<std::int64_t>(fold(ms));
            s.t_recognize = fold(rec);
            s.t_order = fold(ord);
            s.t_decompose = fold(dec);
            s.t_validate = fold(val);
            s.width = static_cast<int>(fold(widths));
            s.verdict = "summary";
            emit_row(os, s);
        };
        emit_summary("median", [](const std::vector<double>& xs) { return median(xs); });
        emit_summary("mean", [](const std::vector<double>& xs) { return mean(xs); });
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"halin-td: optimal tree decompositions of Halin graphs"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate random Halin instances (.gr + .halin)");
    std::string gen_group = "small";
    int gen_count = 10;
    std::uint64_t gen_seed = 1;
    std::string gen_out = ".";
    std::optional<std::uint64_t> gen_nmin, gen_nmax;
    gen->add_option("--group", gen_group, "size group")
        ->check(CLI::IsMember({"small", "medium", "large", "giant"}))
        ->capture_default_str();
    gen->add_option("--count", gen_count, "number of instances")->capture_default_str();
    gen->add_option("--seed", gen_seed, "base seed; instance i uses seed+i")->capture_default_str();
    gen->add_option("--out", gen_out, "output directory")->capture_default_str();
    gen->add_option("--n-min", gen_nmin, "override the group's lower tree-size bound");
    gen->add_option("--n-max", gen_nmax, "override the group's upper tree-size bound");

    // recognize
    auto* rec = app.add_subcommand("recognize", "test whether a .gr graph is Halin");
    std::string rec_input;
    bool rec_emit = false;
    rec->add_option("input", rec_input, ".gr file")->required();
    rec->add_flag("--emit-annotation", rec_emit, "write the .halin sidecar on success");

    // decompose
    auto* dec = app.add_subcommand("decompose", "compute a width-3 tree decomposition");
    std::string dec_input, dec_annotation, dec_output;
    dec->add_option("input", dec_input, ".gr file")->required();
    dec->add_option("-a,--annotation", dec_annotation, ".halin sidecar (default: auto-detect)");
    dec->add_option("-o,--out", dec_output, "output .td file")->required();

    // validate
    auto* val = app.add_subcommand("validate", "check a .td against its graph");
    std::string val_graph, val_td;
    val->add_option("graph", val_graph, ".gr file")->required();
    val->add_option("td", val_td, ".td file")->required();

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact treewidth by brute force (tiny graphs)");
    std::string orc_input, orc_out;
    int orc_limit = 16;
    orc->add_option("input", orc_input, ".gr file")->required();
    orc->add_option("--limit", orc_limit, "max vertex count")->capture_default_str();
    orc->add_option("-o,--out", orc_out, "write the witness decomposition here");

    // bench
    auto* ben = app.add_subcommand("bench", "time the pipeline over a directory of instances");
    std::string ben_dir, ben_out;
    int ben_repeats = 3;
    int ben_jobs = 1;
    ben->add_option("dir", ben_dir, "directory with .gr (+ optional .halin) files")->required();
    ben->add_option("--repeats", ben_repeats, "timing runs per instance (median wins)")
        ->capture_default_str();
    ben->add_option("--jobs", ben_jobs, "parallel workers (timings stay per-instance serial)")
        ->capture_default_str();
    ben->add_option("--out", ben_out, "CSV output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(gen_group, gen_count, gen_seed, gen_out, gen_nmin, gen_nmax);
        if (rec->parsed()) return cmd_recognize(rec_input, rec_emit);
        if (dec->parsed()) return cmd_decompose(dec_input, dec_annotation, dec_output);
        if (val->parsed()) return cmd_validate(val_graph, val_td);
        if (orc->parsed()) return cmd_oracle(orc_input, orc_limit, orc_out);
        if (ben->parsed()) return cmd_bench(ben_dir, ben_repeats, ben_jobs, ben_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
