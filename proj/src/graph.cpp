#include "critgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace critgraph {

namespace {

void require_mask_size(const Graph &g) {
    if (g.size() > 64)
        throw GraphError("operation limited to graphs with at most 64 vertices");
}

std::uint64_t all_bits(std::size_t n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

VertexSet bits_to_set(std::uint64_t bits) {
    VertexSet out;
    while (bits) {
        out.push_back(static_cast<Vertex>(std::countr_zero(bits)));
        bits &= bits - 1;
    }
    return out;
}

// Bron-Kerbosch with Tomita pivoting; `adj` is the adjacency of the graph
// whose maximal cliques are wanted.
void bron_kerbosch(const std::vector<std::uint64_t> &adj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::uint64_t> &out) {
    if (p == 0) {
        if (x == 0) out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int best = -1;
    int pivot = 0;
    while (px) {
        int u = std::countr_zero(px);
        px &= px - 1;
        int c = std::popcount(p & adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    std::uint64_t cand = p & ~adj[pivot];
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

std::size_t max_clique(const std::vector<std::uint64_t> &adj, std::uint64_t p, std::size_t current,
                       std::size_t best) {
    if (p == 0) return std::max(best, current);
    while (p) {
        if (current + static_cast<std::size_t>(std::popcount(p)) <= best) return best;
        int v = std::countr_zero(p);
        p &= p - 1;
        best = max_clique(adj, p & adj[v], current + 1, best);
    }
    return best;
}

// Iterated degree refinement. Colours are small integers, stable across
// graphs because they are ranked by the (old colour, neighbour colours) key.
std::vector<std::size_t> refine_colours(const Graph &g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> colour(n);
    for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
    std::size_t classes = 0;
    for (;;) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys(n);
        for (Vertex v = 0; v < n; ++v) {
            keys[v].first = colour[v];
            for (Vertex u : g.neighbors(v)) keys[v].second.push_back(colour[u]);
            std::sort(keys[v].second.begin(), keys[v].second.end());
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
        if (sorted.size() == classes) break;
        classes = sorted.size();
    }
    return colour;
}

} // namespace

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges) {
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto &nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.edge_count_ += nb.size();
    }
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges,
                        std::vector<ShadowLabel> labels) {
    Graph g = from_edges(n, edges);
    if (!labels.empty()) {
        if (labels.size() != n) throw GraphError("label count does not match vertex count");
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError("duplicate shadow label");
        for (const auto &l : labels)
            if (l.copy == 0) throw GraphError("shadow copies are numbered from 1");
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto &nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

ShadowLabel Graph::label(Vertex v) const {
    if (v >= size()) throw GraphError("vertex out of range");
    return labels_.empty() ? ShadowLabel{v, 1} : labels_[v];
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
    require_mask_size(*this);
    std::uint64_t m = 0;
    for (Vertex u : adj_.at(v)) m |= std::uint64_t{1} << u;
    return m;
}

Graph family(Family kind, std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    switch (kind) {
    case Family::cycle:
        if (n < 3) throw GraphError("cycle needs at least 3 vertices");
        for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        return Graph::from_edges(n, e);
    case Family::complete:
        if (n < 1) throw GraphError("complete graph needs at least 1 vertex");
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
        return Graph::from_edges(n, e);
    case Family::antihole:
        if (n < 3) throw GraphError("antihole needs at least 3 vertices");
        return complement(family(Family::cycle, n));
    case Family::path:
        if (n < 1) throw GraphError("path needs at least 1 vertex");
        for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return Graph::from_edges(n, e);
    }
    throw GraphError("unknown family");
}

Graph edgeless(std::size_t n) { return Graph::from_edges(n, {}); }

VertexSet normalize(const Graph &g, VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.back() >= g.size()) throw GraphError("vertex out of range");
    return s;
}

Graph induced_subgraph(const Graph &g, const VertexSet &keep) {
    VertexSet y = normalize(g, keep);
    std::vector<std::size_t> pos(g.size(), g.size());
    for (std::size_t i = 0; i < y.size(); ++i) pos[y[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (Vertex u : g.neighbors(y[i]))
            if (pos[u] != g.size() && i < pos[u]) e.emplace_back(i, pos[u]);
    std::vector<ShadowLabel> labels;
    if (g.has_labels())
        for (Vertex v : y) labels.push_back(g.labels()[v]);
    return Graph::from_edges(y.size(), e, std::move(labels));
}

Graph delete_vertex(const Graph &g, Vertex v) {
    if (v >= g.size()) throw GraphError("vertex out of range");
    VertexSet keep;
    for (Vertex u = 0; u < g.size(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph complement(const Graph &g) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph::from_edges(g.size(), e, g.labels());
}

Graph expand(const Graph &g, const VertexSet &w) {
    VertexSet ws = normalize(g, w);
    const std::size_t n = g.size();
    std::vector<ShadowLabel> labels(n);
    std::map<std::size_t, std::size_t> next_copy;
    for (Vertex v = 0; v < n; ++v) {
        labels[v] = g.label(v);
        auto &c = next_copy[labels[v].base];
        c = std::max(c, labels[v].copy + 1);
    }
    auto e = g.edges();
    for (std::size_t k = 0; k < ws.size(); ++k) {
        Vertex orig = ws[k];
        Vertex twin = n + k;
        e.emplace_back(orig, twin);
        for (Vertex u : g.neighbors(orig)) e.emplace_back(u, twin);
        // Neighbours that are themselves expanded: join their twin as well.
        for (std::size_t j = 0; j < k; ++j)
            if (g.adjacent(orig, ws[j])) e.emplace_back(n + j, twin);
        ShadowLabel base = labels[orig];
        labels.push_back({base.base, next_copy[base.base]++});
    }
    return Graph::from_edges(n + ws.size(), e, std::move(labels));
}

Graph expand_sequentially(const Graph &g, const std::vector<Vertex> &order) {
    // Track where each original vertex currently lives; earlier expansions do
    // not move existing indices, so the first shadow keeps the old index.
    Graph cur = g;
    for (Vertex v : order) {
        if (v >= g.size()) throw GraphError("vertex out of range");
        cur = expand(cur, {v});
    }
    return cur;
}

Graph power_expansion(const Graph &g, std::size_t s) {
    if (s < 1) throw GraphError("expansion power must be at least 1");
    const std::size_t n = g.size();
    std::vector<std::pair<Vertex, Vertex>> e;
    std::vector<ShadowLabel> labels;
    labels.reserve(n * s);
    for (Vertex i = 0; i < n; ++i) {
        for (std::size_t a = 1; a <= s; ++a) {
            labels.push_back({i, a});
            for (std::size_t b = a + 1; b <= s; ++b)
                e.emplace_back(shadow_index(i, a, s), shadow_index(i, b, s));
        }
    }
    for (auto [u, v] : g.edges())
        for (std::size_t a = 1; a <= s; ++a)
            for (std::size_t b = 1; b <= s; ++b)
                e.emplace_back(shadow_index(u, a, s), shadow_index(v, b, s));
    return Graph::from_edges(n * s, e, std::move(labels));
}

Graph mycielski(const Graph &g) {
    const std::size_t n = g.size();
    auto e = g.edges();
    for (auto [u, v] : g.edges()) {
        e.emplace_back(n + u, v);
        e.emplace_back(n + v, u);
    }
    for (Vertex i = 0; i < n; ++i) e.emplace_back(n + i, 2 * n);
    return Graph::from_edges(2 * n + 1, e);
}

bool is_independent(const Graph &g, const VertexSet &s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_vertex_cover(const Graph &g, const VertexSet &s) {
    std::vector<char> in(g.size(), 0);
    for (Vertex v : s) in.at(v) = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

std::vector<VertexSet> maximal_independent_sets(const Graph &g) {
    require_mask_size(g);
    const std::size_t n = g.size();
    if (n == 0) return {VertexSet{}};
    std::vector<std::uint64_t> co(n);
    for (Vertex v = 0; v < n; ++v) co[v] = all_bits(n) & ~g.neighbor_mask(v) & ~(std::uint64_t{1} << v);
    std::vector<std::uint64_t> found;
    bron_kerbosch(co, 0, all_bits(n), 0, found);
    std::vector<VertexSet> out;
    out.reserve(found.size());
    for (auto bits : found) out.push_back(bits_to_set(bits));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph &g) {
    std::vector<VertexSet> out;
    for (const auto &s : maximal_independent_sets(g)) {
        VertexSet cover;
        std::size_t k = 0;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (k < s.size() && s[k] == v)
                ++k;
            else
                cover.push_back(v);
        }
        out.push_back(std::move(cover));
    }
    return out;
}

std::size_t independence_number(const Graph &g) {
    return clique_number(complement(g));
}

std::size_t clique_number(const Graph &g) {
    require_mask_size(g);
    std::vector<std::uint64_t> adj(g.size());
    for (Vertex v = 0; v < g.size(); ++v) adj[v] = g.neighbor_mask(v);
    return max_clique(adj, all_bits(g.size()), 0, 0);
}

bool is_connected(const Graph &g) {
    if (g.size() == 0) return true;
    std::vector<char> seen(g.size(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.size();
}

namespace {

bool extend_isomorphism(const Graph &a, const Graph &b, const std::vector<std::size_t> &ca,
                        const std::vector<std::size_t> &cb, const std::vector<Vertex> &order,
                        std::size_t depth, std::vector<Vertex> &map, std::vector<char> &used) {
    if (depth == order.size()) return true;
    Vertex v = order[depth];
    for (Vertex w = 0; w < b.size(); ++w) {
        if (used[w] || ca[v] != cb[w]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k) {
            Vertex u = order[k];
            ok = a.adjacent(u, v) == b.adjacent(map[u], w);
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend_isomorphism(a, b, ca, cb, order, depth + 1, map, used)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool is_isomorphic(const Graph &a, const Graph &b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    const std::size_t n = a.size();
    std::vector<std::size_t> da, db;
    for (Vertex v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    // Refine on the disjoint union so that colours are comparable.
    std::vector<std::pair<Vertex, Vertex>> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(n + u, n + v);
    auto colour = refine_colours(Graph::from_edges(2 * n, e));
    std::vector<std::size_t> ca(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::size_t> cb(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    // Map rare colour classes first, then follow adjacency (BFS-like order).
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : ca) ++class_size[c];
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    while (order.size() < n) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            auto key = [&](Vertex x) {
                std::size_t links = 0;
                for (Vertex u : a.neighbors(x)) links += placed[u];
                return std::make_tuple(links > 0 ? 0 : 1, class_size[ca[x]], n - links, x);
            };
            if (best == n || key(v) < key(best)) best = v;
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<Vertex> map(n);
    std::vector<char> used(n, 0);
    return extend_isomorphism(a, b, ca, cb, order, 0, map, used);
}

namespace {

struct CanonSearch {
    const Graph &g;
    std::vector<std::vector<Vertex>> cell_of_position;
    std::vector<Vertex> perm;
    std::vector<char> used;
    std::vector<bool> current;
    std::vector<bool> best;
    bool have_best = false;

    bool prefix_worse() const {
        if (!have_best) return false;
        for (std::size_t i = 0; i < current.size(); ++i)
            if (current[i] != best[i]) return current[i];
        return false;
    }

    void run(std::size_t pos) {
        const std::size_t n = g.size();
        if (pos == n) {
            if (!have_best || current < best) {
                best = current;
                have_best = true;
            }
            return;
        }
        for (Vertex v : cell_of_position[pos]) {
            if (used[v]) continue;
            std::size_t mark = current.size();
            for (std::size_t i = 0; i < pos; ++i) current.push_back(g.adjacent(perm[i], v));
            if (!prefix_worse()) {
                perm[pos] = v;
                used[v] = 1;
                run(pos + 1);
                used[v] = 0;
            }
            current.resize(mark);
        }
    }
};

} // namespace

std::vector<bool> canonical_form(const Graph &g) {
    const std::size_t n = g.size();
    auto colour = refine_colours(g);
    std::vector<Vertex> by_colour(n);
    std::iota(by_colour.begin(), by_colour.end(), 0);
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](Vertex x, Vertex y) { return colour[x] < colour[y]; });
    CanonSearch search{g, {}, std::vector<Vertex>(n), std::vector<char>(n, 0), {}, {}, false};
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::vector<Vertex> cell;
        for (Vertex v : by_colour)
            if (colour[v] == colour[by_colour[pos]]) cell.push_back(v);
        search.cell_of_position.push_back(std::move(cell));
    }
    search.run(0);
    // Prefix with the colour profile so graphs with different refinements
    // never collide.
    std::vector<bool> out;
    for (std::size_t pos = 0; pos < n; ++pos)
        for (std::size_t b = 0; b < 8; ++b) out.push_back((colour[by_colour[pos]] >> b) & 1U);
    out.insert(out.end(), search.best.begin(), search.best.end());
    return out;
}

std::vector<Graph> all_graphs(std::size_t n) {
    if (n == 0) return {Graph{}};
    if (n > 10) throw GraphError("graph enumeration limited to 10 vertices");
    auto smaller = all_graphs(n - 1);
    std::map<std::vector<bool>, Graph> classes;
    for (const auto &h : smaller) {
        auto base = h.edges();
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
            auto e = base;
            for (Vertex v = 0; v + 1 < n; ++v)
                if ((nb >> v) & 1U) e.emplace_back(v, n - 1);
            Graph g = Graph::from_edges(n, e);
            classes.try_emplace(canonical_form(g), std::move(g));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto &[key, g] : classes) out.push_back(std::move(g));
    return out;
}

std::string vertex_name(const Graph &g, Vertex v) {
    auto l = g.label(v);
    std::string name = "x" + std::to_string(l.base + 1);
    if (g.has_labels()) name += "," + std::to_string(l.copy);
    return name;
}

} // namespace critgraph
