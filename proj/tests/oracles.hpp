#pragma once

// Brute-force reference implementations used only by the tests. Each one
// follows the textbook definition directly and shares no code path with the
// library routine it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/ideal.hpp"

namespace oracle {

using critgraph::Exponent;
using critgraph::Graph;
using critgraph::Monomial;
using critgraph::MonomialIdeal;
using critgraph::Vertex;
using critgraph::VertexSet;

inline bool adjacent_by_edges(const Graph &g, Vertex u, Vertex v) {
    for (auto [a, b] : g.edges())
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

/// Smallest k admitting a proper colouring, by trying every map V -> [k].
inline std::size_t chromatic_number(const Graph &g) {
    const std::size_t n = g.size();
    if (n == 0) return 0;
    auto edges = g.edges();
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> c(n, 0);
        for (;;) {
            bool ok = std::all_of(edges.begin(), edges.end(), [&](auto e) { return c[e.first] != c[e.second]; });
            if (ok) return k;
            std::size_t i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

inline bool critical(const Graph &g) {
    std::size_t chi = oracle::chromatic_number(g);
    for (Vertex v = 0; v < g.size(); ++v) {
        VertexSet keep;
        for (Vertex u = 0; u < g.size(); ++u)
            if (u != v) keep.push_back(u);
        if (oracle::chromatic_number(critgraph::induced_subgraph(g, keep)) != chi - 1) return false;
    }
    return g.size() > 0;
}

inline std::vector<VertexSet> subsets_by_mask(std::size_t n, const std::function<bool(std::uint64_t)> &keep) {
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (!keep(m)) continue;
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if ((m >> v) & 1U) s.push_back(v);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool independent_mask(const Graph &g, std::uint64_t m) {
    for (auto [u, v] : g.edges())
        if (((m >> u) & 1U) && ((m >> v) & 1U)) return false;
    return true;
}

/// Maximal independent sets by scanning all 2^n subsets.
inline std::vector<VertexSet> maximal_independent_sets(const Graph &g) {
    const std::size_t n = g.size();
    return subsets_by_mask(n, [&](std::uint64_t m) {
        if (!independent_mask(g, m)) return false;
        for (Vertex v = 0; v < n; ++v)
            if (!((m >> v) & 1U) && independent_mask(g, m | (std::uint64_t{1} << v))) return false;
        return true;
    });
}

/// Minimal vertex covers by scanning all 2^n subsets.
inline std::vector<VertexSet> minimal_vertex_covers(const Graph &g) {
    const std::size_t n = g.size();
    auto covers = [&](std::uint64_t m) {
        for (auto [u, v] : g.edges())
            if (!((m >> u) & 1U) && !((m >> v) & 1U)) return false;
        return true;
    };
    auto all = subsets_by_mask(n, [&](std::uint64_t m) {
        if (!covers(m)) return false;
        for (Vertex v = 0; v < n; ++v)
            if (((m >> v) & 1U) && covers(m & ~(std::uint64_t{1} << v))) return false;
        return true;
    });
    return all;
}

/// Isomorphism by trying all n! bijections.
inline bool isomorphic(const Graph &a, const Graph &b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(p[u], p[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool divides(const std::vector<Exponent> &a, const std::vector<Exponent> &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Every product of d generators (multisets), unreduced.
inline std::vector<std::vector<Exponent>> all_products(const MonomialIdeal &ideal, std::size_t d) {
    const auto &gens = ideal.generators();
    std::vector<std::vector<Exponent>> out;
    std::vector<std::size_t> pick(d, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == d) {
            std::vector<Exponent> e(ideal.nvars(), 0);
            for (auto i : pick)
                for (std::size_t v = 0; v < e.size(); ++v) e[v] += gens[i][v];
            out.push_back(e);
            return;
        }
        for (std::size_t i = from; i < gens.size(); ++i) {
            pick[pos] = i;
            rec(pos + 1, i);
        }
    };
    rec(0, 0);
    return out;
}

/// Minimal generators of ideal^d: all products, then a quadratic
/// divisibility filter.
inline std::vector<std::vector<Exponent>> power_generators(const MonomialIdeal &ideal, std::size_t d) {
    auto prods = all_products(ideal, d);
    std::sort(prods.begin(), prods.end());
    prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
    std::vector<std::vector<Exponent>> out;
    for (std::size_t i = 0; i < prods.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < prods.size() && minimal; ++j)
            minimal = j == i || !divides(prods[j], prods[i]);
        if (minimal) out.push_back(prods[i]);
    }
    return out;
}

inline bool power_contains(const MonomialIdeal &ideal, std::size_t d, const Monomial &m) {
    for (const auto &p : all_products(ideal, d))
        if (divides(p, m.exponents())) return true;
    return false;
}

/// chi_b straight from the definition: assign b-subsets of [d] to vertices,
/// increasing d until some assignment keeps neighbours disjoint.
inline std::size_t b_fold_chromatic(const Graph &g, std::size_t b) {
    const std::size_t n = g.size();
    auto edges = g.edges();
    for (std::size_t d = b;; ++d) {
        std::vector<std::uint64_t> subsets;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
            if (static_cast<std::size_t>(std::popcount(m)) == b) subsets.push_back(m);
        std::vector<std::uint64_t> colour(n, 0);
        // Depth-first assignment in vertex order.
        std::function<bool(Vertex)> rec = [&](Vertex v) {
            if (v == n) return true;
            for (auto s : subsets) {
                bool ok = true;
                for (Vertex u : g.neighbors(v))
                    if (u < v && (colour[u] & s)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                colour[v] = s;
                if (rec(v + 1)) return true;
            }
            return false;
        };
        if (rec(0)) return d;
    }
}

/// Every exponent vector in [0, bound]^n.
inline std::vector<Monomial> box(std::size_t n, Exponent bound) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(n, 0);
    for (;;) {
        out.emplace_back(e);
        std::size_t i = 0;
        while (i < n && ++e[i] > bound) e[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline Exponent max_exponent(const MonomialIdeal &ideal) {
    Exponent m = 0;
    for (const auto &g : ideal.generators())
        for (auto e : g.exponents()) m = std::max(m, e);
    return m;
}

/// Random graph on n vertices with edge probability p and no isolated vertex.
inline Graph random_graph_without_isolated(std::size_t n, double p, std::mt19937 &rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        Graph g = Graph::from_edges(n, e);
        bool ok = g.edge_count() > 0;
        for (Vertex v = 0; v < n && ok; ++v) ok = g.degree(v) > 0;
        if (ok) return g;
    }
}

inline Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

} // namespace oracle
