#include "excol/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "excol/common.hpp"

namespace excol {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph load_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    GraphBuilder* builder = nullptr;
    GraphBuilder storage(0);

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail(lineno, "duplicate problem line");
            std::string fmt;
            long long nn = -1, mm = -1;
            if (!(ls >> fmt >> nn >> mm) || fmt != "edge" || nn < 0 || mm < 0)
                fail(lineno, "malformed header, expected \"p edge n m\"");
            n = static_cast<int>(nn);
            storage = GraphBuilder(n);
            builder = &storage;
        } else if (tag == "e") {
            if (builder == nullptr) fail(lineno, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "endpoint out of range");
            if (u == v) fail(lineno, "self-loop");
            builder->add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        } else {
            fail(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("missing \"p edge n m\" header");
    return storage.build();
}

Graph load_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return load_dimacs(in);
}

Graph load_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return load_dimacs(in);
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v).elements())
            if (u > v) out << "e " << v + 1 << ' ' << u + 1 << '\n';
    return out.str();
}

ListAssignment load_lists(std::istream& in, int vertex_count, int universe_size) {
    ListAssignment out;
    out.lists.assign(static_cast<std::size_t>(vertex_count), {});
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
    std::string line;
    int lineno = 0;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        // strip a trailing comment-free format: "v: c1 c2 ..."
        auto colon = line.find(':');
        std::istringstream head(line.substr(0, colon));
        std::string first;
        if (!(head >> first)) continue;
        if (first == "c") continue;
        if (colon == std::string::npos) fail(lineno, "expected \"v: c1 c2 ...\"");
        long long v = -1;
        try {
            v = std::stoll(first);
        } catch (...) {
            fail(lineno, "bad vertex id");
        }
        if (v < 0 || v >= vertex_count) fail(lineno, "vertex id out of range");
        if (seen[static_cast<std::size_t>(v)]) fail(lineno, "duplicate vertex line");
        seen[static_cast<std::size_t>(v)] = true;
        std::istringstream tail(line.substr(colon + 1));
        long long c;
        while (tail >> c) {
            if (c < 0) fail(lineno, "negative color id");
            out.lists[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
            max_id = std::max(max_id, static_cast<int>(c));
        }
    }
    out.universe_size = universe_size >= 0 ? universe_size : max_id + 1;
    out.normalize();
    out.validate(vertex_count);
    return out;
}

ListAssignment load_lists_file(const std::string& path, int vertex_count, int universe_size) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open lists file: " + path);
    return load_lists(in, vertex_count, universe_size);
}

std::string emit_lists(const ListAssignment& lists) {
    std::ostringstream out;
    for (std::size_t v = 0; v < lists.lists.size(); ++v) {
        out << v << ':';
        for (int c : lists.lists[v]) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

}  // namespace excol
