#include "critgraph/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace critgraph {

namespace {

std::size_t parse_count(std::string_view s, const char *what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Graph parse_edge_list(std::istream &in) {
    std::string line;
    auto next_line = [&](std::string &out) {
        while (std::getline(in, out)) {
            auto t = trim(out);
            if (!t.empty() && t.front() != '#') {
                out = std::string(t);
                return true;
            }
        }
        return false;
    };
    if (!next_line(line)) throw ParseError("edge list is empty");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("edge list header must be 'n m'");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (long long k = 0; k < m; ++k) {
        if (!next_line(line)) throw ParseError("edge list ends after " + std::to_string(k) + " edges");
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || u < 0 || v < 0) throw ParseError("bad edge line: '" + line + "'");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph::from_edges(static_cast<std::size_t>(n), edges);
    } catch (const GraphError &e) {
        throw ParseError(e.what());
    }
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> std::size_t {
        if (i >= text.size()) throw ParseError("graph6 string truncated");
        return static_cast<std::size_t>(text[i] - 63);
    };
    std::size_t n = 0;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else if (byte(1) < 63) {
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        pos = 8;
    }
    std::size_t bits_needed = n * (n - (n > 0)) / 2;
    std::size_t bytes_needed = (bits_needed + 5) / 6;
    if (text.size() - pos != bytes_needed) throw ParseError("graph6 payload has the wrong length");

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            std::size_t b = byte(pos + k / 6);
            if ((b >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph &g) {
    const std::size_t n = g.size();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < 258048) {
        out.push_back(126);
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
    std::size_t acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph builtin_graph(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw ParseError("builtin graph must look like kind:n");
    std::string_view kind = spec.substr(0, colon);
    std::size_t n = parse_count(spec.substr(colon + 1), "builtin size");
    try {
        if (kind == "cycle") return family(Family::cycle, n);
        if (kind == "complete") return family(Family::complete, n);
        if (kind == "antihole") return family(Family::antihole, n);
        if (kind == "path") return family(Family::path, n);
        if (kind == "mycielski-cycle") return mycielski(family(Family::cycle, n));
    } catch (const GraphError &e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown builtin family '" + std::string(kind) + "'");
}

Graph load(const GraphDocument &doc) {
    switch (doc.format) {
    case GraphFormat::edge_list:
        return parse_edge_list(doc.payload);
    case GraphFormat::graph6:
        return parse_graph6(doc.payload);
    case GraphFormat::builtin:
        return builtin_graph(doc.payload);
    }
    throw ParseError("unknown graph format");
}

} // namespace critgraph
