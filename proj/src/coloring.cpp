#include "critgraph/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "critgraph/simplex.hpp"

namespace critgraph {

bool is_valid_coloring(const Graph &g, const Coloring &c) {
    if (c.assignment.size() != g.size() || c.b < 1) return false;
    std::vector<std::vector<std::size_t>> sorted(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        auto s = c.assignment[v];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
        if (s.size() != c.b) return false;
        if (!s.empty() && s.back() >= c.colors_used) return false;
        sorted[v] = std::move(s);
    }
    for (auto [u, v] : g.edges()) {
        std::vector<std::size_t> common;
        std::set_intersection(sorted[u].begin(), sorted[u].end(), sorted[v].begin(), sorted[v].end(),
                              std::back_inserter(common));
        if (!common.empty()) return false;
    }
    return true;
}

namespace {

// Exact k-colourability by DSATUR backtracking. A new colour is only opened
// when all previously used colours are blocked, which removes colour
// permutation symmetry.
class DsaturSearch {
public:
    DsaturSearch(const Graph &g, std::size_t k)
        : g_(g), k_(k), n_(g.size()), colour_(n_, none), blocked_(n_ * k, 0), saturation_(n_, 0) {}

    bool run() { return step(0, 0); }

    Coloring coloring() const {
        Coloring c;
        c.b = 1;
        c.assignment.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            c.assignment[v] = {colour_[v]};
            c.colors_used = std::max(c.colors_used, colour_[v] + 1);
        }
        return c;
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    const Graph &g_;
    std::size_t k_;
    std::size_t n_;
    std::vector<std::size_t> colour_;
    std::vector<std::uint32_t> blocked_;
    std::vector<std::size_t> saturation_;

    Vertex pick() const {
        Vertex best = none;
        std::size_t best_free_degree = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] != none) continue;
            std::size_t free_degree = 0;
            for (Vertex u : g_.neighbors(v)) free_degree += colour_[u] == none;
            if (best == none || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && free_degree > best_free_degree)) {
                best = v;
                best_free_degree = free_degree;
            }
        }
        return best;
    }

    void assign(Vertex v, std::size_t c) {
        colour_[v] = c;
        for (Vertex u : g_.neighbors(v))
            if (blocked_[u * k_ + c]++ == 0) ++saturation_[u];
    }

    void unassign(Vertex v) {
        std::size_t c = colour_[v];
        for (Vertex u : g_.neighbors(v))
            if (--blocked_[u * k_ + c] == 0) --saturation_[u];
        colour_[v] = none;
    }

    bool step(std::size_t coloured, std::size_t opened) {
        if (coloured == n_) return true;
        Vertex v = pick();
        if (saturation_[v] >= k_) return false;
        std::size_t limit = std::min(k_, opened + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (blocked_[v * k_ + c]) continue;
            assign(v, c);
            if (step(coloured + 1, std::max(opened, c + 1))) return true;
            unassign(v);
        }
        return false;
    }
};

Coloring greedy_dsatur(const Graph &g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> colour(n, static_cast<std::size_t>(-1));
    Coloring c;
    c.assignment.resize(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        std::size_t best_sat = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (colour[v] != static_cast<std::size_t>(-1)) continue;
            std::vector<std::size_t> used;
            for (Vertex u : g.neighbors(v))
                if (colour[u] != static_cast<std::size_t>(-1)) used.push_back(colour[u]);
            std::sort(used.begin(), used.end());
            std::size_t sat = static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
            if (best == n || sat > best_sat || (sat == best_sat && g.degree(v) > g.degree(best))) {
                best = v;
                best_sat = sat;
            }
        }
        std::vector<char> taken(n + 1, 0);
        for (Vertex u : g.neighbors(best))
            if (colour[u] != static_cast<std::size_t>(-1)) taken[colour[u]] = 1;
        std::size_t col = 0;
        while (taken[col]) ++col;
        colour[best] = col;
        c.assignment[best] = {col};
        c.colors_used = std::max(c.colors_used, col + 1);
    }
    return c;
}

std::uint64_t mask_of(const VertexSet &s) {
    std::uint64_t m = 0;
    for (Vertex v : s) m |= std::uint64_t{1} << v;
    return m;
}

// Minimum multicover of the vertices by the given sets, each vertex at least
// `demand` times, with at most `budget` sets. Sets are branched on per most
// constrained vertex; excluding the earlier alternatives in later branches
// makes every multiset appear once.
class MulticoverSearch {
public:
    MulticoverSearch(std::size_t n, std::vector<std::uint64_t> sets, std::size_t demand)
        : n_(n), sets_(std::move(sets)), residual_(n, demand), allowed_(sets_.size(), 1) {}

    std::optional<std::vector<std::size_t>> run(std::size_t budget) {
        budget_ = budget;
        chosen_.clear();
        if (step()) return chosen_;
        return std::nullopt;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> sets_;
    std::vector<std::size_t> residual_;
    std::vector<char> allowed_;
    std::vector<std::size_t> chosen_;
    std::size_t budget_ = 0;

    bool step() {
        std::size_t total = 0, max_res = 0;
        std::uint64_t need = 0;
        for (Vertex v = 0; v < n_; ++v) {
            total += residual_[v];
            max_res = std::max(max_res, residual_[v]);
            if (residual_[v]) need |= std::uint64_t{1} << v;
        }
        if (total == 0) return true;
        const std::size_t left = budget_ - chosen_.size();
        if (max_res > left) return false;
        std::size_t best_cover = 0;
        for (std::size_t i = 0; i < sets_.size(); ++i)
            if (allowed_[i]) best_cover = std::max<std::size_t>(best_cover, std::popcount(sets_[i] & need));
        if (best_cover == 0 || (total + best_cover - 1) / best_cover > left) return false;

        Vertex pivot = n_;
        std::size_t pivot_options = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (!residual_[v]) continue;
            std::size_t options = 0;
            for (std::size_t i = 0; i < sets_.size(); ++i)
                options += allowed_[i] && ((sets_[i] >> v) & 1U);
            if (options == 0) return false;
            if (pivot == n_ || options < pivot_options ||
                (options == pivot_options && residual_[v] > residual_[pivot])) {
                pivot = v;
                pivot_options = options;
            }
        }

        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < sets_.size(); ++i)
            if (allowed_[i] && ((sets_[i] >> pivot) & 1U)) candidates.push_back(i);
        std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
            return std::popcount(sets_[a] & need) > std::popcount(sets_[b] & need);
        });

        std::vector<std::size_t> excluded;
        bool found = false;
        for (std::size_t i : candidates) {
            chosen_.push_back(i);
            std::vector<Vertex> touched;
            for (Vertex v = 0; v < n_; ++v)
                if (((sets_[i] >> v) & 1U) && residual_[v]) {
                    --residual_[v];
                    touched.push_back(v);
                }
            found = step();
            if (found) break;
            for (Vertex v : touched) ++residual_[v];
            chosen_.pop_back();
            allowed_[i] = 0;
            excluded.push_back(i);
        }
        for (std::size_t i : excluded) allowed_[i] = 1;
        return found;
    }
};

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

} // namespace

std::optional<Coloring> find_k_coloring(const Graph &g, std::size_t k) {
    if (g.size() == 0) return Coloring{1, 0, {}};
    if (k == 0) return std::nullopt;
    DsaturSearch search(g, k);
    if (!search.run()) return std::nullopt;
    return search.coloring();
}

ChromaticResult chromatic_number(const Graph &g) {
    if (g.size() == 0) return {0, std::nullopt};
    Coloring greedy = greedy_dsatur(g);
    std::size_t lower = g.size() <= 64 ? clique_number(g) : 1;
    for (std::size_t k = lower; k < greedy.colors_used; ++k)
        if (auto c = find_k_coloring(g, k)) return {c->colors_used, c};
    return {greedy.colors_used, greedy};
}

CriticalityResult is_critical(const Graph &g) {
    CriticalityResult r;
    r.chi = chromatic_number(g).value;
    for (Vertex v = 0; v < g.size(); ++v) {
        Graph h = delete_vertex(g, v);
        if (!find_k_coloring(h, r.chi - 1)) r.failing_vertices.push_back(v);
    }
    r.critical = g.size() > 0 && r.failing_vertices.empty();
    return r;
}

ChromaticResult b_fold_chromatic(const Graph &g, std::size_t b) {
    if (b < 1) throw std::invalid_argument("fold count must be at least 1");
    const std::size_t n = g.size();
    if (n == 0) return {0, std::nullopt};
    auto mis = maximal_independent_sets(g);
    std::vector<std::uint64_t> sets;
    for (const auto &s : mis) sets.push_back(mask_of(s));

    const std::size_t alpha = independence_number(g);
    std::size_t lower = std::max((b * n + alpha - 1) / alpha, b * clique_number(g));
    std::size_t upper = b * chromatic_number(g).value;

    MulticoverSearch search(n, sets, b);
    for (std::size_t d = lower; d <= upper; ++d) {
        auto chosen = search.run(d);
        if (!chosen) continue;
        Coloring c;
        c.b = b;
        c.colors_used = chosen->size();
        c.assignment.resize(n);
        for (std::size_t colour = 0; colour < chosen->size(); ++colour)
            for (Vertex v : mis[(*chosen)[colour]])
                if (c.assignment[v].size() < b) c.assignment[v].push_back(colour);
        return {d, c};
    }
    throw std::logic_error("multicover search exceeded the b * chi upper bound");
}

FractionalResult fractional_chromatic(const Graph &g, bool cross_check) {
    const std::size_t n = g.size();
    if (n == 0) throw std::invalid_argument("fractional chromatic number of the empty graph");
    auto mis = maximal_independent_sets(g);
    const auto m = static_cast<Eigen::Index>(mis.size());
    const auto cols = static_cast<Eigen::Index>(n);

    // max sum(y) s.t. y(I) <= 1 for each maximal independent set I; the
    // multipliers are the optimal fractional colouring.
    DenseMatrix<Rational> a = DenseMatrix<Rational>::Constant(m, cols, Rational(0));
    for (Eigen::Index i = 0; i < m; ++i)
        for (Vertex v : mis[static_cast<std::size_t>(i)]) a(i, static_cast<Eigen::Index>(v)) = Rational(1);
    DenseVector<Rational> rhs = DenseVector<Rational>::Constant(m, Rational(1));
    DenseVector<Rational> obj = DenseVector<Rational>::Constant(cols, Rational(1));
    auto lp = solve_packing_lp<Rational>(a, rhs, obj);

    FractionalResult r;
    r.value = lp.value;
    std::int64_t weight_lcm = 1;
    for (Eigen::Index i = 0; i < m; ++i) {
        const Rational &w = lp.dual(i);
        if (w > Rational(0)) {
            r.certificate.weights.emplace(mis[static_cast<std::size_t>(i)], w);
            r.certificate.total += w;
            weight_lcm = lcm64(weight_lcm, w.den());
        }
    }
    if (r.certificate.total != r.value) throw std::logic_error("LP duality gap in fractional colouring");

    if (!cross_check) {
        r.achieving_b = static_cast<std::size_t>(weight_lcm);
        return r;
    }
    for (std::int64_t b : {r.value.den(), weight_lcm}) {
        auto chi_b = b_fold_chromatic(g, static_cast<std::size_t>(b)).value;
        if (Rational(static_cast<std::int64_t>(chi_b), b) == r.value) {
            r.achieving_b = static_cast<std::size_t>(b);
            return r;
        }
    }
    throw std::logic_error("b-fold chromatic number does not attain the LP value");
}

bool is_valid_certificate(const Graph &g, const FractionalCertificate &cert) {
    std::vector<Rational> cover(g.size(), Rational(0));
    Rational sum(0);
    for (const auto &[set, w] : cert.weights) {
        if (w < Rational(0) || !is_independent(g, set)) return false;
        for (Vertex v : set) {
            if (v >= g.size()) return false;
            cover[v] += w;
        }
        sum += w;
    }
    if (sum != cert.total) return false;
    return std::all_of(cover.begin(), cover.end(), [](const Rational &c) { return c >= Rational(1); });
}

bool classify_chi_f_window(const Graph &g) {
    auto chi = static_cast<std::int64_t>(chromatic_number(g).value);
    auto chi_f = fractional_chromatic(g, false).value;
    return Rational(chi - 1) < chi_f && chi_f <= Rational(chi);
}

} // namespace critgraph
