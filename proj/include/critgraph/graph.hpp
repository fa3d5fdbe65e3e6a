#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critgraph {

using Vertex = std::size_t;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Provenance of a vertex produced by an expansion: the shadow `copy` of the
/// original vertex `base`. Copies are numbered from 1.
struct ShadowLabel {
    std::size_t base = 0;
    std::size_t copy = 1;

    friend bool operator==(const ShadowLabel &, const ShadowLabel &) = default;
    friend auto operator<=>(const ShadowLabel &, const ShadowLabel &) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite simple graph on vertices 0..n-1.
///
/// Immutable once built. Adjacency lists are sorted; labels are either empty
/// or hold one distinct ShadowLabel per vertex.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate and reversed pairs are
    /// merged; loops and out-of-range endpoints throw GraphError.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges);

    /// Same as from_edges, attaching provenance labels.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges,
                            std::vector<ShadowLabel> labels);

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<Vertex> &neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<ShadowLabel> &labels() const { return labels_; }

    /// Label of v, or (v, 1) when the graph carries no labels.
    ShadowLabel label(Vertex v) const;

    /// Neighbourhood of v as a bit mask. Requires size() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<ShadowLabel> labels_;
    std::size_t edge_count_ = 0;
};

enum class Family { cycle, complete, antihole, path };

/// C_n, K_n, the complement of C_n, or the path on n vertices.
Graph family(Family kind, std::size_t n);

/// Empty graph (no edges) on n vertices.
Graph edgeless(std::size_t n);

/// Sorts and deduplicates, then range-checks against g.
VertexSet normalize(const Graph &g, VertexSet s);

Graph induced_subgraph(const Graph &g, const VertexSet &keep);
Graph delete_vertex(const Graph &g, Vertex v);
Graph complement(const Graph &g);

/// Expansion G[W]: every w in W is replaced by two adjacent shadows, both
/// adjacent to the former neighbours of w.
///
/// Vertex w keeps its index and becomes the first shadow; the second shadows
/// are appended after the n original vertices in increasing order of w. Their
/// labels reuse the base of w with the next unused copy number, so nested
/// expansions of already expanded graphs keep (base, copy) distinct.
Graph expand(const Graph &g, const VertexSet &w);

/// Same as expand, but expands the vertices one at a time in the given order.
Graph expand_sequentially(const Graph &g, const std::vector<Vertex> &order);

/// s-th expansion: each vertex i becomes a clique of shadows (i, 1..s), and
/// shadows of adjacent vertices are completely joined. Shadow (i, j) has index
/// i * s + (j - 1).
Graph power_expansion(const Graph &g, std::size_t s);

/// Index of shadow (base, copy) inside power_expansion(g, s).
inline Vertex shadow_index(std::size_t base, std::size_t copy, std::size_t s) {
    return base * s + (copy - 1);
}

/// Mycielski graph on x_0..x_{n-1}, y_0..y_{n-1}, z (indices i, n + i, 2n).
Graph mycielski(const Graph &g);

bool is_independent(const Graph &g, const VertexSet &s);
bool is_vertex_cover(const Graph &g, const VertexSet &s);

/// Every maximal independent set, each sorted, listed in lexicographic order.
/// Requires size() <= 64.
std::vector<VertexSet> maximal_independent_sets(const Graph &g);

/// Complements of maximal_independent_sets, in the same order.
std::vector<VertexSet> minimal_vertex_covers(const Graph &g);

/// Size of a largest independent set.
std::size_t independence_number(const Graph &g);

/// Size of a largest clique.
std::size_t clique_number(const Graph &g);

bool is_connected(const Graph &g);

/// Exact isomorphism test by backtracking with degree and refinement pruning.
bool is_isomorphic(const Graph &a, const Graph &b);

/// Lexicographically smallest upper-triangle adjacency string over all
/// relabellings that respect the iterated degree partition. Two graphs are
/// isomorphic iff their canonical forms are equal. Intended for n <= 10.
std::vector<bool> canonical_form(const Graph &g);

/// One representative per isomorphism class of graphs on exactly n vertices,
/// generated by vertex augmentation. Practical for n <= 8.
std::vector<Graph> all_graphs(std::size_t n);

/// Human-readable label such as "x3" or "x3,2" (1-based, as in the literature).
std::string vertex_name(const Graph &g, Vertex v);

} // namespace critgraph
