#include "cfreduce/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "cfreduce/errors.hpp"

namespace cfreduce::io {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::uint64_t> to_uint(std::string_view tok) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

std::uint64_t expect_uint(std::string_view tok, std::size_t line, const char* what) {
    auto v = to_uint(tok);
    if (!v) throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
    return *v;
}

// Yields (line number, content) for non-blank lines that are not comments.
class LineReader {
  public:
    LineReader(std::string_view text, char comment) : text_(text), comment_(comment) {}

    bool next(std::size_t& number, std::string_view& line) {
        while (pos_ <= text_.size()) {
            if (pos_ == text_.size()) {
                ++line_no_;
                pos_ = text_.size() + 1;
                return false;
            }
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view raw = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            auto first = raw.find_first_not_of(" \t\r");
            if (first == std::string_view::npos || raw[first] == comment_) continue;
            number = line_no_;
            line = raw;
            return true;
        }
        return false;
    }

    std::size_t line_number() const { return line_no_; }

  private:
    std::string_view text_;
    char comment_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

std::size_t vertex_key(const std::string& key, std::size_t n, ErrorKind kind) {
    auto v = to_uint(key);
    if (!v || *v < 1 || *v > n) {
        throw Error(kind, "vertex key '" + key + "' outside [1, " + std::to_string(n) + "]");
    }
    return static_cast<std::size_t>(*v);
}

template <typename T>
T get_uint(const Json& j, const char* key, ErrorKind kind) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw Error(kind, std::string("missing or non-integer \"") + key + "\"");
    }
    return j.at(key).get<T>();
}

} // namespace

Hypergraph read_hypergraph(std::string_view text) {
    LineReader reader(text, '#');
    std::size_t no = 0;
    std::string_view line;
    if (!reader.next(no, line)) throw ParseError(reader.line_number(), "missing \"n m\" header");
    auto head = split_ws(line);
    if (head.size() != 2) throw ParseError(no, "header must be \"n m\"");
    const auto n = expect_uint(head[0], no, "vertex count");
    const auto m = expect_uint(head[1], no, "edge count");

    std::vector<std::vector<VertexId>> edges;
    edges.reserve(m);
    std::vector<std::size_t> seen(n + 1, 0);
    for (std::uint64_t e = 0; e < m; ++e) {
        if (!reader.next(no, line)) {
            throw ParseError(reader.line_number(), "expected " + std::to_string(m) + " edges, found " +
                                                       std::to_string(e));
        }
        auto tok = split_ws(line);
        const auto s = expect_uint(tok[0], no, "edge size");
        if (s == 0) throw ParseError(no, "empty edge");
        if (tok.size() != s + 1) {
            throw ParseError(no, "edge size " + std::to_string(s) + " but " + std::to_string(tok.size() - 1) +
                                     " vertices listed");
        }
        std::vector<VertexId> members;
        members.reserve(s);
        for (std::size_t i = 1; i < tok.size(); ++i) {
            const auto v = expect_uint(tok[i], no, "vertex id");
            if (v < 1 || v > n) {
                throw ParseError(no, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
            }
            if (seen[v] == e + 1) throw ParseError(no, "vertex " + std::to_string(v) + " repeated in edge");
            seen[v] = e + 1;
            members.push_back(static_cast<VertexId>(v));
        }
        edges.push_back(std::move(members));
    }
    if (reader.next(no, line)) throw ParseError(no, "unexpected content after " + std::to_string(m) + " edges");
    return Hypergraph(n, std::move(edges));
}

std::string write_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const auto& e : h.edges()) {
        out << e.size();
        for (VertexId v : e) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

Json coloring_to_json(const PartialColoring& f) {
    Json colors = Json::object();
    for (VertexId v = 1; v <= f.num_vertices(); ++v) {
        auto c = f.color_of(v);
        colors[std::to_string(v)] = c ? Json(*c) : Json(nullptr);
    }
    return Json{{"k", f.palette_size()}, {"colors", std::move(colors)}};
}

PartialColoring coloring_from_json(const Json& j, std::size_t n) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidColoring, "coloring must be a JSON object");
    const auto k = get_uint<Color>(j, "k", ErrorKind::InvalidColoring);
    if (!j.contains("colors") || !j.at("colors").is_object()) {
        throw Error(ErrorKind::InvalidColoring, "missing \"colors\" object");
    }
    std::vector<std::optional<Color>> colors(n);
    for (const auto& [key, value] : j.at("colors").items()) {
        const auto v = vertex_key(key, n, ErrorKind::InvalidColoring);
        if (value.is_null()) continue;
        if (!value.is_number_unsigned()) {
            throw Error(ErrorKind::InvalidColoring, "color of vertex " + key + " must be an integer or null");
        }
        colors[v - 1] = value.get<Color>();
    }
    return PartialColoring(k, std::move(colors));
}

Json multicoloring_to_json(const MulticolorAssignment& a) {
    Json colors = Json::object();
    for (VertexId v = 1; v <= a.num_vertices(); ++v) {
        Json held = Json::array();
        for (const auto& pc : a.held_by(v)) held.push_back(Json::array({pc.phase, pc.color}));
        colors[std::to_string(v)] = std::move(held);
    }
    return Json{{"k", a.palette_size()}, {"phases", a.phases()}, {"colors", std::move(colors)}};
}

bool is_multicoloring_json(const Json& j) { return j.is_object() && j.contains("phases"); }

MulticolorAssignment multicoloring_from_json(const Json& j, std::size_t n) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidAssignment, "multicoloring must be a JSON object");
    const auto k = get_uint<Color>(j, "k", ErrorKind::InvalidAssignment);
    const auto phases = get_uint<std::uint32_t>(j, "phases", ErrorKind::InvalidAssignment);
    if (!j.contains("colors") || !j.at("colors").is_object()) {
        throw Error(ErrorKind::InvalidAssignment, "missing \"colors\" object");
    }
    MulticolorAssignment a(n, k, phases);
    for (const auto& [key, value] : j.at("colors").items()) {
        const auto v = vertex_key(key, n, ErrorKind::InvalidAssignment);
        if (!value.is_array()) throw Error(ErrorKind::InvalidAssignment, "vertex " + key + " must map to an array");
        for (const auto& pair : value) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
                !pair[1].is_number_unsigned()) {
                throw Error(ErrorKind::InvalidAssignment, "vertex " + key + " holds a malformed [phase, color] pair");
            }
            a.add(static_cast<VertexId>(v), {pair[0].get<std::uint32_t>(), pair[1].get<Color>()});
        }
    }
    return a;
}

std::string write_dimacs(const Graph& g, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "c " << comment << '\n';
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edge_list()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph read_dimacs(std::string_view text) {
    LineReader reader(text, 'c');
    std::size_t no = 0;
    std::string_view line;
    std::optional<std::uint64_t> n;
    std::uint64_t declared = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (reader.next(no, line)) {
        auto tok = split_ws(line);
        if (tok[0] == "p") {
            if (n) throw ParseError(no, "duplicate problem line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
                throw ParseError(no, "problem line must be \"p edge N M\"");
            }
            n = expect_uint(tok[2], no, "vertex count");
            declared = expect_uint(tok[3], no, "edge count");
        } else if (tok[0] == "e") {
            if (!n) throw ParseError(no, "edge before problem line");
            if (tok.size() != 3) throw ParseError(no, "edge line must be \"e i j\"");
            const auto u = expect_uint(tok[1], no, "vertex id");
            const auto v = expect_uint(tok[2], no, "vertex id");
            if (u < 1 || u > *n || v < 1 || v > *n) throw ParseError(no, "vertex outside [1, N]");
            if (u == v) throw ParseError(no, "self-loop");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!n) throw ParseError(reader.line_number(), "missing problem line");
    if (edges.size() != declared) {
        throw ParseError(reader.line_number(), "problem line declares " + std::to_string(declared) +
                                                   " edges, found " + std::to_string(edges.size()));
    }
    return Graph(*n, edges);
}

Json triple_map_to_json(const ConflictGraph& g) {
    Json triples = Json::array();
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        const Triple& t = g.triple(i);
        triples.push_back(Json{{"index", i + 1}, {"edge", t.edge}, {"vertex", t.vertex}, {"color", t.color}});
    }
    return Json{{"k", g.palette_size()},
                {"hypergraph_vertices", g.source().num_vertices()},
                {"hypergraph_edges", g.source().num_edges()},
                {"triples", std::move(triples)}};
}

Json independent_set_to_json(const std::string& solver, const IndependentSet& s) {
    Json members = Json::array();
    for (auto v : s.members()) members.push_back(v + 1);
    return Json{{"solver", solver}, {"size", s.size()}, {"members", std::move(members)}};
}

Json report_to_json(const SolverReport& r, bool include_timing) {
    return Json{{"instance", r.instance},
                {"solver", r.solver},
                {"size", r.size},
                {"alpha", r.alpha ? Json(*r.alpha) : Json(nullptr)},
                {"ratio", r.ratio ? Json(*r.ratio) : Json(nullptr)},
                {"elapsed_ms", include_timing ? Json(r.elapsed_ms) : Json(nullptr)},
                {"branches", r.branches}};
}

Json phase_record_to_json(const PhaseLogRecord& r, bool include_timing) {
    return Json{{"phase", r.phase},
                {"edges", r.edges},
                {"conflict_vertices", r.conflict_vertices},
                {"solver", r.solver},
                {"independent_set", r.independent_set},
                {"edges_removed", r.edges_removed},
                {"elapsed_ms", include_timing ? Json(r.elapsed_ms) : Json(nullptr)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidParameter, "cannot write " + path);
    out << content;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace cfreduce::io
