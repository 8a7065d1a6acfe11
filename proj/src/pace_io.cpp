#include "pace_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace halin {

namespace {

// Splits into lines, handling a missing final newline; \r is not tolerated
// (the formats are Unix-newline by contract).
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Returns false at end of input. Skips blank lines.
    bool next(std::string_view& line) {
        while (pos_ < text_.size()) {
            std::size_t eol = text_.find('\n', pos_);
            if (eol == std::string_view::npos) eol = text_.size();
            std::string_view l = text_.substr(pos_, eol - pos_);
            pos_ = eol + 1;
            ++line_no_;
            if (l.find_first_not_of(' ') == std::string_view::npos) continue;
            line = l;
            return true;
        }
        return false;
    }

    int line_no() const { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_no_ = 0;
};

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view tok, const LineReader& lr, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(lr.line_no()) + ": bad " + what +
                         " '" + std::string(tok) + "'");
    return value;
}

Vertex parse_vertex_1based(std::string_view tok, Vertex n, const LineReader& lr) {
    auto id = parse_number<std::int64_t>(tok, lr, "vertex id");
    if (id < 1 || id > n)
        throw ParseError("line " + std::to_string(lr.line_no()) + ": vertex id " +
                         std::to_string(id) + " out of [1, " + std::to_string(n) + "]");
    return static_cast<Vertex>(id - 1);
}

void append_edge_line(std::string& out, Edge e) {
    out += std::to_string(e.first + 1);
    out += ' ';
    out += std::to_string(e.second + 1);
    out += '\n';
}

}  // namespace

void HalinAnnotation::normalize() {
    for (Edge& e : tree_edges) e = normalized(e);
    for (Edge& e : cycle_edges) e = normalized(e);
    std::sort(tree_edges.begin(), tree_edges.end());
    std::sort(cycle_edges.begin(), cycle_edges.end());
}

Graph parse_gr(std::string_view text) {
    LineReader lr(text);
    std::string_view line;
    bool have_header = false;
    Vertex n = 0;
    std::int64_t m = 0;
    std::vector<Edge> edges;
    while (lr.next(line)) {
        auto toks = tokens(line);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header)
                throw ParseError("line " + std::to_string(lr.line_no()) + ": duplicate header");
            if (toks.size() != 4 || toks[1] != "tw")
                throw ParseError("line " + std::to_string(lr.line_no()) + ": malformed header");
            n = parse_number<Vertex>(toks[2], lr, "vertex count");
            m = parse_number<std::int64_t>(toks[3], lr, "edge count");
            if (n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lr.line_no()) + ": negative header count");
            have_header = true;
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (!have_header)
            throw ParseError("line " + std::to_string(lr.line_no()) + ": edge before 'p tw' header");
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lr.line_no()) + ": malformed edge line");
        Vertex u = parse_vertex_1based(toks[0], n, lr);
        Vertex v = parse_vertex_1based(toks[1], n, lr);
        edges.emplace_back(u, v);
        if (static_cast<std::int64_t>(edges.size()) > m)
            throw ParseError("more edge lines than the header's " + std::to_string(m));
    }
    if (!have_header) throw ParseError("missing 'p tw' header");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", found " +
                         std::to_string(edges.size()));
    try {
        return Graph::build(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string write_gr(const Graph& g) {
    std::vector<Edge> es;
    es.reserve(g.edges().size());
    for (Edge e : g.edges()) es.push_back(normalized(e));
    std::sort(es.begin(), es.end());
    std::string out = "p tw " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (Edge e : es) append_edge_line(out, e);
    return out;
}

TreeDecomposition parse_td(std::string_view text) {
    LineReader lr(text);
    std::string_view line;
    bool have_solution = false;
    std::int64_t num_bags = 0;
    std::int64_t max_bag_size = 0;
    Vertex n = 0;
    std::vector<std::vector<Vertex>> bags;
    std::vector<char> bag_seen;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    while (lr.next(line)) {
        auto toks = tokens(line);
        if (toks[0] == "c") continue;
        if (toks[0] == "s") {
            if (have_solution)
                throw ParseError("line " + std::to_string(lr.line_no()) + ": duplicate solution line");
            if (toks.size() != 5 || toks[1] != "td")
                throw ParseError("line " + std::to_string(lr.line_no()) + ": malformed solution line");
            num_bags = parse_number<std::int64_t>(toks[2], lr, "bag count");
            max_bag_size = parse_number<std::int64_t>(toks[3], lr, "max bag size");
            n = parse_number<Vertex>(toks[4], lr, "vertex count");
            if (num_bags < 0 || max_bag_size < 0 || n < 0)
                throw ParseError("line " + std::to_string(lr.line_no()) + ": negative solution field");
            have_solution = true;
            bags.resize(static_cast<std::size_t>(num_bags));
            bag_seen.assign(static_cast<std::size_t>(num_bags), 0);
            continue;
        }
        if (!have_solution)
            throw ParseError("line " + std::to_string(lr.line_no()) + ": content before 's td' line");
        if (toks[0] == "b") {
            if (toks.size() < 2)
                throw ParseError("line " + std::to_string(lr.line_no()) + ": malformed bag line");
            auto id = parse_number<std::int64_t>(toks[1], lr, "bag id");
            if (id < 1 || id > num_bags)
                throw ParseError("line " + std::to_string(lr.line_no()) + ": bag id " +
                                 std::to_string(id) + " out of range");
            if (bag_seen[static_cast<std::size_t>(id - 1)])
                throw ParseError("line " + std::to_string(lr.line_no()) + ": bag " +
                                 std::to_string(id) + " defined twice");
            bag_seen[static_cast<std::size_t>(id - 1)] = 1;
            auto& bag = bags[static_cast<std::size_t>(id - 1)];
            for (std::size_t k = 2; k < toks.size(); ++k)
                bag.push_back(parse_vertex_1based(toks[k], n, lr));
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            continue;
        }
        // node edge line
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lr.line_no()) + ": malformed node edge line");
        auto a = parse_number<std::int64_t>(toks[0], lr, "bag id");
        auto b = parse_number<std::int64_t>(toks[1], lr, "bag id");
        if (a < 1 || a > num_bags || b < 1 || b > num_bags)
            throw ParseError("line " + std::to_string(lr.line_no()) + ": bag id out of range");
        edges.emplace_back(static_cast<std::int32_t>(a - 1), static_cast<std::int32_t>(b - 1));
        if (static_cast<std::int64_t>(edges.size()) > std::max<std::int64_t>(num_bags - 1, 0))
            throw ParseError("more node edge lines than #bags-1");
    }
    if (!have_solution) throw ParseError("missing 's td' line");
    for (std::int64_t i = 0; i < num_bags; ++i)
        if (!bag_seen[static_cast<std::size_t>(i)])
            throw ParseError("bag " + std::to_string(i + 1) + " never defined");
    if (static_cast<std::int64_t>(edges.size()) != std::max<std::int64_t>(num_bags - 1, 0))
        throw ParseError("node edge count mismatch: expected " +
                         std::to_string(std::max<std::int64_t>(num_bags - 1, 0)) + ", found " +
                         std::to_string(edges.size()));
    TreeDecomposition td;
    for (const auto& bag : bags) td.add_bag(bag);
    td.edges = std::move(edges);
    td.root = 0;
    (void)max_bag_size;  // informative only; the writer recomputes it
    return td;
}

std::string write_td(const TreeDecomposition& td, Vertex n) {
    int max_bag = 0;
    for (std::int32_t t = 0; t < td.node_count(); ++t)
        max_bag = std::max(max_bag, static_cast<int>(td.bag(t).size()));
    std::string out = "s td " + std::to_string(td.node_count()) + " " +
                      std::to_string(max_bag) + " " + std::to_string(n) + "\n";
    for (std::int32_t t = 0; t < td.node_count(); ++t) {
        out += "b ";
        out += std::to_string(t + 1);
        for (Vertex v : td.bag(t)) {
            out += ' ';
            out += std::to_string(v + 1);
        }
        out += '\n';
    }
    for (auto [a, b] : td.edges) {
        out += std::to_string(a + 1);
        out += ' ';
        out += std::to_string(b + 1);
        out += '\n';
    }
    return out;
}

HalinAnnotation parse_annotation(std::string_view text) {
    LineReader lr(text);
    std::string_view line;
    HalinAnnotation a;
    bool have_root = false;
    // Ids are range-checked against the graph at the verification stage; here
    // they only need to be positive.
    auto parse_id = [&](std::string_view tok) {
        auto id = parse_number<std::int64_t>(tok, lr, "vertex id");
        if (id < 1)
            throw ParseError("line " + std::to_string(lr.line_no()) + ": vertex id must be >= 1");
        return static_cast<Vertex>(id - 1);
    };
    while (lr.next(line)) {
        auto toks = tokens(line);
        if (toks[0] == "root") {
            if (toks.size() != 2 || have_root)
                throw ParseError("line " + std::to_string(lr.line_no()) + ": bad root line");
            a.root = parse_id(toks[1]);
            have_root = true;
        } else if (toks[0] == "seed") {
            if (toks.size() != 2 || a.seed.has_value())
                throw ParseError("line " + std::to_string(lr.line_no()) + ": bad seed line");
            a.seed = parse_number<std::uint64_t>(toks[1], lr, "seed");
        } else if (toks[0] == "t" || toks[0] == "y") {
            if (toks.size() != 3)
                throw ParseError("line " + std::to_string(lr.line_no()) + ": bad edge line");
            Edge e{parse_id(toks[1]), parse_id(toks[2])};
            (toks[0] == "t" ? a.tree_edges : a.cycle_edges).push_back(e);
        } else {
            throw ParseError("line " + std::to_string(lr.line_no()) + ": unknown tag '" +
                             std::string(toks[0]) + "'");
        }
    }
    if (!have_root) throw ParseError("missing root line");
    a.normalize();
    for (std::size_t i = 0; i + 1 < a.tree_edges.size(); ++i)
        if (a.tree_edges[i] == a.tree_edges[i + 1])
            throw ParseError("duplicate tree edge");
    for (std::size_t i = 0; i + 1 < a.cycle_edges.size(); ++i)
        if (a.cycle_edges[i] == a.cycle_edges[i + 1])
            throw ParseError("duplicate cycle edge");
    if (std::ranges::any_of(a.tree_edges, [&](Edge e) {
            return std::ranges::binary_search(a.cycle_edges, e);
        }))
        throw ParseError("tree and cycle edge sets overlap");
    return a;
}

std::string write_annotation(const HalinAnnotation& a) {
    HalinAnnotation canon = a;
    canon.normalize();
    std::string out = "root " + std::to_string(canon.root + 1) + "\n";
    if (canon.seed) out += "seed " + std::to_string(*canon.seed) + "\n";
    for (Edge e : canon.tree_edges) {
        out += "t ";
        append_edge_line(out, e);
    }
    for (Edge e : canon.cycle_edges) {
        out += "y ";
        append_edge_line(out, e);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw ParseError("error reading " + path);
    return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw ParseError("error writing " + path);
}

}  // namespace halin
