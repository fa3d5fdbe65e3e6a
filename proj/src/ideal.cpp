#include "critgraph/ideal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

namespace critgraph {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b) throw IdealError("exponent overflow");
    return a + b;
}

void require_same_ring(std::size_t a, std::size_t b) {
    if (a != b) throw IdealError("variable count mismatch");
}

std::string var_power(std::size_t i, Exponent e) {
    std::string s = "x" + std::to_string(i + 1);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

// Trie over exponent vectors, one level per variable, answering "does some
// stored monomial divide m".
class DivisorTrie {
public:
    explicit DivisorTrie(std::size_t nvars) : nvars_(nvars), nodes_(1) {}

    void insert(const Monomial &m) {
        std::size_t node = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
            auto &kids = nodes_[node];
            auto it = std::find_if(kids.begin(), kids.end(), [&](const auto &k) { return k.first == m[i]; });
            if (it != kids.end()) {
                node = it->second;
            } else {
                std::size_t fresh = nodes_.size();
                nodes_[node].emplace_back(m[i], fresh);
                nodes_.emplace_back();
                node = fresh;
            }
        }
    }

    bool has_divisor(const Monomial &m) const { return nodes_.size() > 1 && search(0, 0, m); }

private:
    std::size_t nvars_;
    std::vector<std::vector<std::pair<Exponent, std::size_t>>> nodes_;

    bool search(std::size_t node, std::size_t depth, const Monomial &m) const {
        if (depth == nvars_) return true;
        for (const auto &[e, child] : nodes_[node])
            if (e <= m[depth] && search(child, depth + 1, m)) return true;
        return false;
    }
};

// Minimal elements under divisibility, sorted lexicographically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial &a, const Monomial &b) {
        auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) return gens;
    DivisorTrie trie(gens.front().nvars());
    std::vector<Monomial> kept;
    for (auto &g : gens) {
        if (trie.has_divisor(g)) continue;
        trie.insert(g);
        kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

Monomial Monomial::squarefree(std::size_t nvars, const VertexSet &s) {
    std::vector<Exponent> e(nvars, 0);
    for (Vertex v : s) {
        if (v >= nvars) throw IdealError("variable index out of range");
        e[v] = 1;
    }
    return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

VertexSet Monomial::support() const {
    VertexSet s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i]) s.push_back(i);
    return s;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial &other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
    require_same_ring(a.nvars(), b.nvars());
    std::vector<Exponent> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial &a, const Monomial &b) {
    require_same_ring(a.nvars(), b.nvars());
    std::vector<Exponent> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial operator/(const Monomial &a, const Monomial &b) {
    require_same_ring(a.nvars(), b.nvars());
    if (!b.divides(a)) throw IdealError("monomial division with negative exponent");
    std::vector<Exponent> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] - b.exps_[i];
    return Monomial(std::move(e));
}

std::string Monomial::str() const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (!exps_[i]) continue;
        if (!s.empty()) s += "*";
        s += var_power(i, exps_[i]);
    }
    return s.empty() ? "1" : s;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto &g : gens) require_same_ring(g.nvars(), nvars);
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial &g) {
        return std::all_of(g.exponents().begin(), g.exponents().end(), [](Exponent e) { return e <= 1; });
    });
}

std::string MonomialIdeal::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
    return s + ")";
}

VertexSet IrreducibleIdeal::support() const {
    VertexSet s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i]) s.push_back(i);
    return s;
}

bool IrreducibleIdeal::contains(const Monomial &m) const {
    require_same_ring(nvars(), m.nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] && m[i] >= exps_[i]) return true;
    return false;
}

bool IrreducibleIdeal::contains(const IrreducibleIdeal &other) const {
    require_same_ring(nvars(), other.nvars());
    // Each generator x_i^b_i of `other` must be divisible by some x_i^a_i here.
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (other.exps_[i] && (!exps_[i] || exps_[i] > other.exps_[i])) return false;
    return true;
}

std::strong_ordering operator<=>(const IrreducibleIdeal &a, const IrreducibleIdeal &b) {
    if (auto c = a.support() <=> b.support(); c != 0) return c;
    return a.exps_ <=> b.exps_;
}

std::vector<std::string> IrreducibleIdeal::terms() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i]) out.push_back(var_power(i, exps_[i]));
    return out;
}

std::string IrreducibleIdeal::str() const {
    std::string s = "(";
    auto t = terms();
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + t[i];
    return s + ")";
}

MonomialIdeal cover_ideal(const Graph &g) {
    if (g.edge_count() == 0) throw IdealError("cover ideal needs at least one edge");
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.degree(v) == 0) throw IdealError("cover ideal needs a graph without isolated vertices");
    const std::size_t n = g.size();
    MonomialIdeal j;
    bool first = true;
    for (auto [u, v] : g.edges()) {
        MonomialIdeal edge(n, {Monomial::squarefree(n, {u}), Monomial::squarefree(n, {v})});
        j = first ? edge : intersect(j, edge);
        first = false;
    }
    return j;
}

MonomialIdeal multiply(const MonomialIdeal &a, const MonomialIdeal &b) {
    require_same_ring(a.nvars(), b.nvars());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto &x : a.generators())
        for (const auto &y : b.generators()) gens.push_back(x * y);
    return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal &a, const MonomialIdeal &b) {
    require_same_ring(a.nvars(), b.nvars());
    std::vector<Monomial> gens;
    for (const auto &x : a.generators())
        for (const auto &y : b.generators()) gens.push_back(lcm(x, y));
    return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal &a, const MonomialIdeal &b) {
    require_same_ring(a.nvars(), b.nvars());
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal &ideal, std::size_t s) {
    if (s < 1) throw IdealError("ideal power must be at least 1");
    MonomialIdeal out = ideal;
    for (std::size_t k = 1; k < s; ++k) out = multiply(out, ideal);
    return out;
}

bool contains(const MonomialIdeal &ideal, const Monomial &m) {
    require_same_ring(ideal.nvars(), m.nvars());
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Monomial &g) { return g.divides(m); });
}

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<Exponent> &v) const {
        std::size_t h = v.size();
        for (Exponent e : v) h = h * 1000003U ^ e;
        return h;
    }
};

// Picks generators in non-decreasing index order so each multiset of
// generators is tried once. Failures are memoised per (first index, count,
// residual exponents).
class PowerMembership {
public:
    PowerMembership(const MonomialIdeal &ideal) : gens_(ideal.generators()) {
        min_degree_ = std::numeric_limits<std::uint64_t>::max();
        for (const auto &g : gens_) min_degree_ = std::min(min_degree_, g.degree());
    }

    bool run(std::size_t d, const Monomial &m) {
        std::vector<Exponent> residual = m.exponents();
        return step(0, d, residual, m.degree());
    }

private:
    const std::vector<Monomial> &gens_;
    std::uint64_t min_degree_ = 0;
    std::unordered_map<std::vector<Exponent>, char, VectorHash> failed_;

    bool step(std::size_t from, std::size_t d, std::vector<Exponent> &residual, std::uint64_t degree) {
        if (d == 0) return true;
        if (degree < d * min_degree_) return false;
        std::vector<Exponent> key = residual;
        key.push_back(static_cast<Exponent>(from));
        key.push_back(static_cast<Exponent>(d));
        if (failed_.count(key)) return false;
        for (std::size_t i = from; i < gens_.size(); ++i) {
            const auto &g = gens_[i];
            bool fits = true;
            for (std::size_t v = 0; v < residual.size() && fits; ++v) fits = g[v] <= residual[v];
            if (!fits) continue;
            for (std::size_t v = 0; v < residual.size(); ++v) residual[v] -= g[v];
            bool ok = step(i, d - 1, residual, degree - g.degree());
            for (std::size_t v = 0; v < residual.size(); ++v) residual[v] += g[v];
            if (ok) return true;
        }
        failed_.emplace(std::move(key), 1);
        return false;
    }
};

} // namespace

bool contains_in_power(const MonomialIdeal &ideal, std::size_t d, const Monomial &m) {
    if (d < 1) throw IdealError("ideal power must be at least 1");
    require_same_ring(ideal.nvars(), m.nvars());
    if (ideal.is_zero()) return false;
    return PowerMembership(ideal).run(d, m);
}

std::size_t b_fold_via_membership(const Graph &g, std::size_t b) {
    if (b < 1) throw IdealError("fold count must be at least 1");
    MonomialIdeal j = cover_ideal(g);
    const std::size_t n = g.size();
    // chi_b <= b * n, so the scan always stops.
    for (std::size_t d = b; d <= b * n; ++d)
        if (contains_in_power(j, d, Monomial::uniform(n, static_cast<Exponent>(d - b)))) return d;
    throw std::logic_error("no power of the cover ideal contains the scanned monomials");
}

Decomposition prune_redundant(Decomposition components) {
    std::sort(components.begin(), components.end());
    components.erase(std::unique(components.begin(), components.end()), components.end());
    Decomposition out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < components.size() && !redundant; ++j)
            redundant = j != i && components[i].contains(components[j]);
        if (!redundant) out.push_back(components[i]);
    }
    return out;
}

namespace {

class Splitter {
public:
    explicit Splitter(std::size_t nvars) : nvars_(nvars) {}

    const Decomposition &run(const std::vector<Monomial> &gens) {
        if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

        // First generator (lex order) with at least two variables in its support.
        const Monomial *split = nullptr;
        for (const auto &g : gens)
            if (g.support().size() >= 2) {
                split = &g;
                break;
            }

        Decomposition result;
        if (!split) {
            std::vector<Exponent> e(nvars_, 0);
            for (const auto &g : gens) {
                auto s = g.support();
                e[s.front()] = g[s.front()];
            }
            result.emplace_back(std::move(e));
        } else {
            std::size_t i = split->support().front();
            std::vector<Exponent> ue(nvars_, 0);
            ue[i] = (*split)[i];
            Monomial u(std::move(ue));
            Monomial v = *split / u;
            Decomposition left = run(with(gens, u));
            const Decomposition &right = run(with(gens, v));
            left.insert(left.end(), right.begin(), right.end());
            result = prune_redundant(std::move(left));
        }
        return memo_.emplace(gens, std::move(result)).first->second;
    }

private:
    std::size_t nvars_;
    std::map<std::vector<Monomial>, Decomposition> memo_;

    static std::vector<Monomial> with(const std::vector<Monomial> &gens, const Monomial &extra) {
        std::vector<Monomial> out;
        out.reserve(gens.size() + 1);
        for (const auto &g : gens)
            if (!extra.divides(g)) out.push_back(g);
        out.push_back(extra);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Incremental engine. Components are tracked through their corners: the
// component (x_i^a_i) corresponds to the exponent vector a - 1, with
// `unbounded` outside the support. Adding a generator g removes each corner
// divisible by g and replaces it by one lowered copy per variable of g; the
// copies dominated by another corner are dropped.
class CornerSet {
public:
    static constexpr Exponent unbounded = std::numeric_limits<Exponent>::max();

    CornerSet(std::size_t nvars, Exponent top) : nvars_(nvars), top_(top), bits_(nvars * top) {}

    std::size_t insert(std::vector<Exponent> corner) {
        std::size_t slot;
        if (!free_.empty()) {
            slot = free_.back();
            free_.pop_back();
            corners_[slot] = std::move(corner);
        } else {
            slot = corners_.size();
            corners_.push_back(std::move(corner));
            if (words(corners_.size()) > alive_.size()) {
                std::size_t w = std::max<std::size_t>(1, alive_.size() * 2);
                alive_.resize(w, 0);
                for (auto &b : bits_) b.resize(w, 0);
            }
        }
        set(alive_, slot, true);
        for (std::size_t j = 0; j < nvars_; ++j)
            for (Exponent t = 1; t <= level(corners_[slot][j]); ++t) set(column(j, t), slot, true);
        return slot;
    }

    void erase(std::size_t slot) {
        set(alive_, slot, false);
        for (std::size_t j = 0; j < nvars_; ++j)
            for (Exponent t = 1; t <= level(corners_[slot][j]); ++t) set(column(j, t), slot, false);
        free_.push_back(slot);
    }

    const std::vector<Exponent> &operator[](std::size_t slot) const { return corners_[slot]; }

    /// Slots whose corner is at least `floor` in every coordinate.
    std::vector<std::size_t> at_least(const std::vector<Exponent> &floor) const {
        std::vector<std::uint64_t> acc = alive_;
        for (std::size_t j = 0; j < nvars_; ++j) {
            Exponent t = level(floor[j]);
            if (t == 0) continue;
            const auto &col = bits_[j * top_ + t - 1];
            bool any = false;
            for (std::size_t w = 0; w < acc.size(); ++w) any |= (acc[w] &= col[w]) != 0;
            if (!any) return {};
        }
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < acc.size(); ++w)
            for (std::uint64_t m = acc[w]; m; m &= m - 1) out.push_back(w * 64 + std::countr_zero(m));
        return out;
    }

    std::vector<std::size_t> live() const { return at_least(std::vector<Exponent>(nvars_, 0)); }

private:
    std::size_t nvars_;
    Exponent top_; // generator exponents never exceed this
    std::vector<std::vector<Exponent>> corners_;
    std::vector<std::size_t> free_;
    std::vector<std::uint64_t> alive_;
    std::vector<std::vector<std::uint64_t>> bits_; // (j, t): corner_j >= t

    static std::size_t words(std::size_t count) { return (count + 63) / 64; }
    Exponent level(Exponent e) const { return std::min(e, top_); }
    std::vector<std::uint64_t> &column(std::size_t j, Exponent t) { return bits_[j * top_ + t - 1]; }
    static void set(std::vector<std::uint64_t> &b, std::size_t slot, bool on) {
        std::uint64_t bit = std::uint64_t{1} << (slot % 64);
        if (on)
            b[slot / 64] |= bit;
        else
            b[slot / 64] &= ~bit;
    }
};

Decomposition incremental_decomposition(std::size_t nvars, const std::vector<Monomial> &gens) {
    Exponent top = 1;
    for (const auto &g : gens)
        for (auto e : g.exponents()) top = std::max(top, e);
    CornerSet corners(nvars, top);
    corners.insert(std::vector<Exponent>(nvars, CornerSet::unbounded));

    for (const auto &g : gens) {
        auto hit = corners.at_least(g.exponents());
        if (hit.empty()) continue;
        std::vector<std::vector<Exponent>> fresh;
        for (std::size_t slot : hit) {
            for (std::size_t i = 0; i < nvars; ++i)
                if (g[i] > 0) {
                    auto c = corners[slot];
                    c[i] = g[i] - 1;
                    fresh.push_back(std::move(c));
                }
            corners.erase(slot);
        }
        std::sort(fresh.begin(), fresh.end());
        fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
        std::vector<std::size_t> slots;
        for (auto &c : fresh) slots.push_back(corners.insert(std::move(c)));
        std::vector<std::size_t> dominated;
        for (std::size_t slot : slots)
            if (corners.at_least(corners[slot]).size() > 1) dominated.push_back(slot);
        for (std::size_t slot : dominated) corners.erase(slot);
    }

    Decomposition out;
    for (std::size_t slot : corners.live()) {
        std::vector<Exponent> a(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i)
            if (corners[slot][i] != CornerSet::unbounded) a[i] = corners[slot][i] + 1;
        out.emplace_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Decomposition irreducible_decomposition(const MonomialIdeal &ideal, DecompositionMethod method) {
    if (ideal.is_zero()) throw IdealError("zero ideal has no irreducible decomposition");
    if (ideal.is_unit()) throw IdealError("unit ideal has no irreducible decomposition");
    if (method == DecompositionMethod::incremental) return incremental_decomposition(ideal.nvars(), ideal.generators());
    Splitter splitter(ideal.nvars());
    return splitter.run(ideal.generators());
}

namespace {

// Corner of a component, with coordinates outside the support raised to
// `cap`, which must be at least every generator exponent.
Monomial corner_of(const IrreducibleIdeal &component, Exponent cap) {
    std::vector<Exponent> e(component.nvars(), cap);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (component.exponent(i) > 0) e[i] = component.exponent(i) - 1;
    return Monomial(std::move(e));
}

template <class Member>
bool corner_is_maximal(const IrreducibleIdeal &component, Exponent cap, Member member) {
    if (component.support().empty()) return false;
    Monomial m = corner_of(component, cap);
    if (member(m)) return false;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (component.exponent(i) == 0) continue;
        auto e = m.exponents();
        ++e[i];
        if (!member(Monomial(std::move(e)))) return false;
    }
    return true;
}

} // namespace

bool is_irreducible_component(const MonomialIdeal &ideal, const IrreducibleIdeal &component) {
    require_same_ring(ideal.nvars(), component.nvars());
    Exponent cap = 0;
    for (const auto &g : ideal.generators())
        for (auto e : g.exponents()) cap = std::max(cap, e);
    return corner_is_maximal(component, cap, [&](const Monomial &m) { return contains(ideal, m); });
}

bool is_component_of_power(const MonomialIdeal &ideal, std::size_t s, const IrreducibleIdeal &component) {
    require_same_ring(ideal.nvars(), component.nvars());
    if (s < 1) throw IdealError("ideal power must be at least 1");
    Exponent cap = 0;
    for (const auto &g : ideal.generators())
        for (auto e : g.exponents()) cap = std::max(cap, e);
    cap = static_cast<Exponent>(cap * s);
    return corner_is_maximal(component, cap, [&](const Monomial &m) { return contains_in_power(ideal, s, m); });
}

std::vector<VertexSet> associated_primes(const Decomposition &components) {
    std::vector<VertexSet> out;
    for (const auto &c : components) out.push_back(c.support());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexSet> associated_primes(const MonomialIdeal &ideal) {
    return associated_primes(irreducible_decomposition(ideal));
}

bool contains(const Decomposition &components, const Monomial &m) {
    return std::all_of(components.begin(), components.end(),
                       [&](const IrreducibleIdeal &c) { return c.contains(m); });
}

} // namespace critgraph
