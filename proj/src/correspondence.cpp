#include "critgraph/correspondence.hpp"

#include <algorithm>
#include <set>

#include "critgraph/parallel.hpp"

namespace critgraph {

std::size_t CorrespondenceReport::mismatches() const {
    std::size_t bad = unmatched.size();
    for (const auto &c : components) bad += !c.verified_critical;
    return bad;
}

VertexSet component_to_Y(const IrreducibleIdeal &component, std::size_t s) {
    if (s < 1) throw IdealError("expansion power must be at least 1");
    VertexSet y;
    for (std::size_t i : component.support()) {
        Exponent a = component.exponent(i);
        if (a > s) throw IdealError("component exponent exceeds the power");
        for (std::size_t j = 1; j <= s - a + 1; ++j) y.push_back(shadow_index(i, j, s));
    }
    return y;
}

namespace {

bool critically_chromatic(const Graph &h, std::size_t target, std::size_t &chi) {
    auto r = is_critical(h);
    chi = r.chi;
    return r.critical && r.chi == target;
}

// Advances `a` through [0, s]^n in odometer order; false after the last.
bool next_exponents(std::vector<Exponent> &a, std::size_t s) {
    for (auto &e : a) {
        if (e < s) {
            ++e;
            return true;
        }
        e = 0;
    }
    return false;
}

} // namespace

CorrespondenceReport verify_correspondence(const Graph &g, std::size_t s, bool converse) {
    CorrespondenceReport report;
    report.s = s;
    const MonomialIdeal js = power(cover_ideal(g), s);
    const Decomposition dec = irreducible_decomposition(js, DecompositionMethod::incremental);
    const Graph gs = power_expansion(g, s);

    report.components.resize(dec.size());
    parallel_for(dec.size(), [&](std::size_t k) {
        auto &c = report.components[k];
        c.component = dec[k];
        c.s = s;
        c.y = component_to_Y(dec[k], s);
        c.verified_critical = critically_chromatic(induced_subgraph(gs, c.y), s + 1, c.chi);
    });

    if (!converse) return report;
    report.converse_checked = true;

    std::vector<IrreducibleIdeal> candidates;
    std::vector<Exponent> a(g.size(), 0);
    while (next_exponents(a, s)) candidates.emplace_back(a);
    report.candidates_examined = candidates.size();

    std::vector<char> critical(candidates.size(), 0);
    parallel_for(candidates.size(), [&](std::size_t k) {
        std::size_t chi = 0;
        critical[k] = critically_chromatic(induced_subgraph(gs, component_to_Y(candidates[k], s)), s + 1, chi);
    });
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (!critical[k]) continue;
        ++report.critical_candidates;
        if (!std::binary_search(dec.begin(), dec.end(), candidates[k]))
            report.unmatched.push_back({candidates[k], component_to_Y(candidates[k], s)});
    }
    return report;
}

PersistenceResult persistence_check(const Graph &g, std::size_t s) {
    if (s < 1) throw IdealError("power must be at least 1");
    const MonomialIdeal j = cover_ideal(g);
    const MonomialIdeal js = power(j, s);
    PersistenceResult r;
    r.s = s;
    r.decomposition = irreducible_decomposition(js, DecompositionMethod::incremental);
    r.next_decomposition = irreducible_decomposition(multiply(js, j), DecompositionMethod::incremental);
    r.primes = associated_primes(r.decomposition);
    r.next_primes = associated_primes(r.next_decomposition);
    std::set_difference(r.primes.begin(), r.primes.end(), r.next_primes.begin(), r.next_primes.end(),
                        std::back_inserter(r.missing));
    r.holds = r.missing.empty();
    return r;
}

SweepReport persistence_sweep(const std::vector<Graph> &graphs, std::size_t s_max) {
    if (s_max < 1) throw IdealError("s_max must be at least 1");
    SweepReport report;
    report.s_max = s_max;
    report.entries.resize(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t k) {
        auto &entry = report.entries[k];
        entry.graph_index = k;
        const MonomialIdeal j = cover_ideal(graphs[k]);
        // Decompose each power once and reuse it for consecutive checks.
        std::vector<Decomposition> decs;
        MonomialIdeal p = j;
        for (std::size_t s = 1; s <= s_max + 1; ++s) {
            decs.push_back(irreducible_decomposition(p, DecompositionMethod::incremental));
            if (s <= s_max) p = multiply(p, j);
        }
        for (std::size_t s = 1; s <= s_max; ++s) {
            PersistenceResult r;
            r.s = s;
            r.decomposition = decs[s - 1];
            r.next_decomposition = decs[s];
            r.primes = associated_primes(r.decomposition);
            r.next_primes = associated_primes(r.next_decomposition);
            std::set_difference(r.primes.begin(), r.primes.end(), r.next_primes.begin(), r.next_primes.end(),
                                std::back_inserter(r.missing));
            r.holds = r.missing.empty();
            entry.checks.push_back(std::move(r));
        }
    });
    for (const auto &e : report.entries)
        for (const auto &c : e.checks)
            if (!c.holds) report.failures.emplace_back(e.graph_index, c.s);
    return report;
}

namespace {

bool is_maximal_independent(const Graph &g, const VertexSet &w) {
    if (!is_independent(g, w)) return false;
    std::vector<char> in(g.size(), 0);
    for (Vertex v : w) in[v] = 1;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (in[v]) continue;
        bool blocked = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex u) { return in[u]; });
        if (!blocked) return false;
    }
    return true;
}

ConjectureWitness probe_with_chi(const Graph &g, const VertexSet &w, std::size_t chi,
                                 std::optional<bool> g_critical) {
    ConjectureWitness out;
    out.w = normalize(g, w);
    out.is_maximal_independent = is_maximal_independent(g, out.w);
    Graph expanded = expand(g, out.w);
    // G sits inside G[W], so a chi-colouring of G[W] pins its chromatic number.
    if (chi <= 64 && find_k_coloring(expanded, chi)) {
        out.expanded_chi = chi;
        return out;
    }
    auto crit = is_critical(expanded);
    out.expanded_chi = crit.chi;
    out.expanded_critical = crit.critical && crit.chi == chi + 1;
    if (out.is_maximal_independent && out.expanded_chi == chi + 1 && !out.expanded_critical) {
        if (!g_critical) g_critical = is_critical(g).critical;
        if (*g_critical)
            throw InvariantViolation("expanding a critical graph at a maximal independent set raised chi "
                                     "without producing a critical graph");
    }
    return out;
}

// Lexicographic k-subsets of {0..n-1}, k ascending.
class SubsetEnumerator {
public:
    explicit SubsetEnumerator(std::size_t n) : n_(n) {}

    bool next(VertexSet &out) {
        if (k_ > n_) return false;
        if (!started_) {
            cur_.resize(k_);
            for (std::size_t i = 0; i < k_; ++i) cur_[i] = i;
            started_ = true;
            out = cur_;
            return true;
        }
        std::size_t i = k_;
        while (i > 0 && cur_[i - 1] == n_ - k_ + i - 1) --i;
        if (i == 0) {
            ++k_;
            started_ = false;
            return next(out);
        }
        ++cur_[i - 1];
        for (std::size_t j = i; j < k_; ++j) cur_[j] = cur_[j - 1] + 1;
        out = cur_;
        return true;
    }

private:
    std::size_t n_;
    std::size_t k_ = 0;
    bool started_ = false;
    VertexSet cur_;
};

} // namespace

ConjectureWitness probe_expansion(const Graph &g, const VertexSet &w) {
    return probe_with_chi(g, w, chromatic_number(g).value, std::nullopt);
}

ConjectureSearchResult conjecture_search(const Graph &g, SearchMode mode) {
    auto crit = is_critical(g);
    if (!crit.critical) throw GraphError("conjecture search needs a critical graph");
    const std::size_t chi = crit.chi;

    ConjectureSearchResult result;
    const auto mis = maximal_independent_sets(g);
    std::set<VertexSet> seen(mis.begin(), mis.end());

    auto try_batch = [&](const std::vector<VertexSet> &batch) {
        std::vector<ConjectureWitness> probes(batch.size());
        parallel_for(batch.size(), [&](std::size_t k) { probes[k] = probe_with_chi(g, batch[k], chi, true); });
        for (auto &p : probes) {
            ++result.candidates_tried;
            if (p.expanded_critical) {
                result.found = true;
                result.witness = std::move(p);
                return true;
            }
        }
        return false;
    };

    const std::size_t batch_size = std::max<std::size_t>(1, worker_count());
    for (std::size_t start = 0; start < mis.size(); start += batch_size) {
        std::vector<VertexSet> batch(mis.begin() + static_cast<std::ptrdiff_t>(start),
                                     mis.begin() + static_cast<std::ptrdiff_t>(std::min(mis.size(), start + batch_size)));
        if (try_batch(batch)) return result;
    }
    if (mode == SearchMode::all_subsets) {
        SubsetEnumerator subsets(g.size());
        VertexSet w;
        std::vector<VertexSet> batch;
        while (subsets.next(w)) {
            if (seen.count(w)) continue;
            batch.push_back(w);
            if (batch.size() == batch_size) {
                if (try_batch(batch)) return result;
                batch.clear();
            }
        }
        if (!batch.empty() && try_batch(batch)) return result;
    }
    result.exhausted = true;
    return result;
}

TechnicalLemmaResult technical_lemma_check(const Graph &g, const VertexSet &w, std::size_t b) {
    const VertexSet ws = normalize(g, w);
    const MonomialIdeal j = cover_ideal(g);
    TechnicalLemmaResult r;
    r.d = b_fold_chromatic(expand(g, ws), b).value;
    if (r.d < 2 * b && !ws.empty())
        throw InvariantViolation("chi_b of the expansion is below 2b; quotient has a negative exponent");
    std::vector<Exponent> e(g.size(), static_cast<Exponent>(r.d - b));
    for (Vertex v : ws) e[v] -= static_cast<Exponent>(b);
    r.monomial = Monomial(std::move(e));
    r.holds = contains_in_power(j, r.d, r.monomial);
    return r;
}

std::optional<ComponentLift> lift_component(const Graph &g, std::size_t s, const IrreducibleIdeal &component,
                                            const Decomposition &next_decomposition) {
    const Graph gs = power_expansion(g, s);
    const Graph h = induced_subgraph(gs, component_to_Y(component, s));
    auto search = conjecture_search(h, SearchMode::all_subsets);
    if (!search.found) return std::nullopt;

    ComponentLift lift;
    lift.w = search.witness->w;
    lift.shift.assign(g.size(), 0);
    for (Vertex v : lift.w) ++lift.shift[h.label(v).base];

    lift.shifts_bounded = true;
    std::vector<Exponent> lifted(g.size(), 0);
    VertexSet y_next;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Exponent a = component.exponent(i);
        if (a == 0) {
            lift.shifts_bounded = lift.shifts_bounded && lift.shift[i] == 0;
            continue;
        }
        if (lift.shift[i] > a) {
            lift.shifts_bounded = false;
            continue;
        }
        lifted[i] = static_cast<Exponent>(a - lift.shift[i] + 1);
        for (std::size_t j = 1; j <= s - a + lift.shift[i] + 1; ++j) y_next.push_back(shadow_index(i, j, s + 1));
    }
    lift.lifted = IrreducibleIdeal(std::move(lifted));
    if (!lift.shifts_bounded) return lift;

    lift.isomorphic = is_isomorphic(expand(h, lift.w), induced_subgraph(power_expansion(g, s + 1), y_next));
    lift.lifted_present = std::binary_search(next_decomposition.begin(), next_decomposition.end(), lift.lifted);
    return lift;
}

} // namespace critgraph
