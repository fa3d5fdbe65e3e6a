// Acceptance run: one PASS/FAIL line per criterion. A criterion passes only
// if every check holds and it finishes inside its time limit.
//
//   acceptance [--extended] [--only N]
//
// --extended also decomposes J(M(C9))^4 in full (criterion 4, opt-in part).

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "critgraph/coloring.hpp"
#include "critgraph/correspondence.hpp"
#include "oracles.hpp"

using namespace critgraph;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::ostringstream notes;

    void check(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            notes << " [failed: " << what << "]";
        }
    }
};

Graph cycle(std::size_t n) { return family(Family::cycle, n); }
Graph complete(std::size_t n) { return family(Family::complete, n); }
Graph antihole(std::size_t n) { return family(Family::antihole, n); }
Graph gprime() { return mycielski(cycle(9)); }

// Mycielski names for G' = M(C9): x_i -> i-1, y_i -> 8+i, z -> 18.
Vertex named(char kind, std::size_t i) {
    switch (kind) {
    case 'x':
        return i - 1;
    case 'y':
        return 9 + i - 1;
    default:
        return 18;
    }
}

Rational r(std::size_t num, std::size_t den = 1) {
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

void criterion1(Outcome &o) {
    auto c9 = is_critical(cycle(9));
    o.check(chromatic_number(cycle(9)).value == 3, "chi(C9) = 3");
    o.check(c9.critical && c9.chi == 3, "C9 critical");
    auto gp = is_critical(gprime());
    o.check(gp.chi == 4, "chi(M(C9)) = 4");
    o.check(gp.critical, "M(C9) critical");
    o.notes << " chi(C9)=" << c9.chi << " chi(M(C9))=" << gp.chi;
}

void criterion2(Outcome &o) {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto f = fractional_chromatic(cycle(2 * n + 1));
        o.check(f.value == r(2) + r(1, n), "chi_f(C" + std::to_string(2 * n + 1) + ")");
        o.check(is_valid_certificate(cycle(2 * n + 1), f.certificate), "certificate C" + std::to_string(2 * n + 1));
        o.notes << " C" << 2 * n + 1 << ":" << f.value;
    }
    for (std::size_t n = 2; n <= 4; ++n) {
        auto f = fractional_chromatic(antihole(2 * n + 1));
        o.check(f.value == r(n) + r(1, 2), "chi_f(antihole " + std::to_string(2 * n + 1) + ")");
        o.notes << " co-C" << 2 * n + 1 << ":" << f.value;
    }
}

void criterion3(Outcome &o) {
    auto c9w = chromatic_number(expand(cycle(9), {1, 4, 7})).value;
    o.check(c9w == 3, "chi(C9[{x2,x5,x8}]) = 3");
    VertexSet ys;
    for (std::size_t i = 1; i <= 9; ++i) ys.push_back(named('y', i));
    auto gy = chromatic_number(expand(gprime(), ys)).value;
    o.check(gy == 4, "chi(G'[{y1..y9}]) = 4");
    VertexSet z;
    for (std::size_t i : {1, 3, 5, 7}) z.push_back(named('x', i));
    for (std::size_t i : {1, 3, 5, 7}) z.push_back(named('y', i));
    auto gz = is_critical(expand(gprime(), z));
    o.check(gz.chi == 5, "chi(G'[Z]) = 5");
    o.check(gz.critical, "G'[Z] critical");
    o.notes << " " << c9w << "/" << gy << "/" << gz.chi;
}

IrreducibleIdeal displayed_component() {
    return IrreducibleIdeal({3, 4, 3, 4, 3, 4, 3, 4, 4, 3, 4, 3, 4, 3, 4, 3, 4, 4, 4});
}

void criterion4(Outcome &o, bool extended) {
    const std::size_t s = 4;
    // The vertex set as displayed: letter, vertex number, shadow number.
    const char *listed[] = {"x11", "x12", "x21", "x31", "x32", "x41", "x51", "x52", "x61",
                            "x71", "x72", "x81", "x91", "y11", "y12", "y21", "y31", "y32",
                            "y41", "y51", "y52", "y61", "y71", "y72", "y81", "y91", "z11"};
    VertexSet want;
    for (const char *name : listed)
        want.push_back(shadow_index(named(name[0], static_cast<std::size_t>(name[1] - '0')),
                                    static_cast<std::size_t>(name[2] - '0'), s));
    std::sort(want.begin(), want.end());

    IrreducibleIdeal comp = displayed_component();
    VertexSet y = component_to_Y(comp, s);
    o.check(y == want, "component_to_Y gives the displayed 27 vertices");
    auto crit = is_critical(induced_subgraph(power_expansion(gprime(), s), y));
    o.check(crit.chi == 5 && crit.critical, "induced subgraph critically 5-chromatic");
    MonomialIdeal j = cover_ideal(gprime());
    o.check(is_component_of_power(j, s, comp), "corner test: component of J^4");
    o.notes << " |Y|=" << y.size() << " chi=" << crit.chi;

    if (extended) {
        Decomposition d = irreducible_decomposition(power(j, s), DecompositionMethod::incremental);
        bool present = std::binary_search(d.begin(), d.end(), comp);
        o.check(present, "component present in the full decomposition of J^4");
        o.notes << " full decomposition: " << d.size() << " components";
    } else {
        o.notes << " (full decomposition skipped; pass --extended)";
    }
}

void criterion5(Outcome &o) {
    for (const Graph &g : {complete(3), complete(4), cycle(5), cycle(7)})
        for (std::size_t s = 1; s <= 2; ++s) {
            auto rep = verify_correspondence(g, s, true);
            o.check(rep.converse_checked && rep.ok(), "correspondence n=" + std::to_string(g.size()) + " s=" + std::to_string(s));
            o.notes << " " << rep.components.size() << "/" << rep.critical_candidates;
        }
}

void criterion6(Outcome &o) {
    std::size_t mismatches = 0;
    for (const Graph &g : {cycle(5), cycle(7), complete(3), complete(4), oracle::petersen()})
        for (std::size_t b = 1; b <= 3; ++b) {
            auto via_ideal = b_fold_via_membership(g, b);
            auto via_cover = b_fold_chromatic(g, b).value;
            if (via_ideal != via_cover) ++mismatches;
        }
    o.check(mismatches == 0, "membership and multicover agree");
    o.notes << " mismatches=" << mismatches;
}

void criterion7(Outcome &o) {
    std::vector<Graph> small;
    for (std::size_t n = 2; n <= 6; ++n)
        for (auto &g : all_graphs(n))
            if (is_connected(g)) small.push_back(std::move(g));
    auto sweep = persistence_sweep(small, 2);
    auto cycles = persistence_sweep({cycle(5), cycle(7)}, 3);
    o.check(small.size() == 142, "142 connected graphs on 2..6 vertices");
    o.check(sweep.failures.empty(), "small graphs persist");
    o.check(cycles.failures.empty(), "C5, C7 persist to s = 3");
    o.notes << " graphs=" << small.size() << " violations=" << sweep.failures.size() + cycles.failures.size();
}

void criterion8(Outcome &o) {
    std::mt19937 rng(20240601);

    std::size_t ideal_failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5, k = 1 + rng() % 6;
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Exponent> e(n);
            for (auto &x : e) x = static_cast<Exponent>(rng() % 5);
            gens.emplace_back(e);
        }
        MonomialIdeal ideal(n, gens);
        if (ideal.is_unit()) {
            --trial;
            continue;
        }
        Decomposition d = irreducible_decomposition(ideal);
        for (const auto &m : oracle::box(n, oracle::max_exponent(ideal) + 1)) {
            bool member = false;
            for (const auto &g : ideal.generators()) member = member || oracle::divides(g.exponents(), m.exponents());
            if (contains(d, m) != member) {
                ++ideal_failures;
                break;
            }
        }
    }
    o.check(ideal_failures == 0, "decomposition matches membership");

    std::size_t order_failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph_without_isolated(3 + rng() % 5, 0.45, rng);
        std::vector<Vertex> w;
        for (Vertex v = 0; v < g.size(); ++v)
            if (rng() % 2) w.push_back(v);
        Graph reference = expand(g, w);
        for (int k = 0; k < 3; ++k) {
            std::shuffle(w.begin(), w.end(), rng);
            if (!is_isomorphic(expand_sequentially(g, w), reference)) ++order_failures;
        }
    }
    o.check(order_failures == 0, "expansion order independence");

    std::size_t fold_failures = 0;
    for (const Graph &g : {cycle(5), cycle(7), complete(3), complete(4), oracle::petersen(), antihole(7),
                           mycielski(cycle(5))}) {
        Rational chi_f = fractional_chromatic(g).value;
        std::vector<std::size_t> chib{0};
        for (std::size_t b = 1; b <= 4; ++b) chib.push_back(b_fold_chromatic(g, b).value);
        for (std::size_t a = 1; a <= 4; ++a) {
            if (chi_f > r(chib[a], a)) ++fold_failures;
            for (std::size_t b = 1; a + b <= 4; ++b)
                if (chib[a + b] > chib[a] + chib[b]) ++fold_failures;
        }
    }
    o.check(fold_failures == 0, "chi_b subadditive and chi_f <= chi_b / b");

    std::size_t lemma_failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph_without_isolated(3 + rng() % 6, 0.5, rng);
        VertexSet w;
        for (Vertex v = 0; v < g.size(); ++v)
            if (rng() % 3 == 0) w.push_back(v);
        if (!technical_lemma_check(g, w, 1 + rng() % 2).holds) ++lemma_failures;
    }
    o.check(lemma_failures == 0, "technical lemma on random triples");
    o.notes << " failures=" << ideal_failures << "/" << order_failures << "/" << fold_failures << "/" << lemma_failures;
}

void criterion9(Outcome &o) {
    std::size_t critical_graphs = 0, raising = 0, probes = 0, violations = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (const Graph &g : all_graphs(n)) {
            auto crit = is_critical(g);
            if (!crit.critical) continue;
            ++critical_graphs;
            auto maximal = maximal_independent_sets(g);
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                VertexSet w;
                for (Vertex v = 0; v < n; ++v)
                    if ((mask >> v) & 1U) w.push_back(v);
                if (!is_independent(g, w)) continue;
                ++probes;
                bool is_maximal = std::binary_search(maximal.begin(), maximal.end(), w);
                ConjectureWitness probe;
                try {
                    probe = probe_expansion(g, w);
                } catch (const InvariantViolation &) {
                    ++violations;
                    continue;
                }
                if (is_maximal && probe.expanded_chi == crit.chi + 1) {
                    ++raising;
                    if (!probe.expanded_critical) ++violations;
                }
                if (!is_maximal && probe.expanded_chi != crit.chi) ++violations;
            }
        }
    o.check(violations == 0, "lemma and remark hold");
    o.notes << " critical graphs=" << critical_graphs << " independent W=" << probes << " raising=" << raising
            << " violations=" << violations;
}

struct Criterion {
    int id;
    const char *title;
    double limit_s;
    std::function<void(Outcome &)> run;
};

} // namespace

int main(int argc, char **argv) {
    bool extended = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0)
            extended = true;
        else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }

    std::vector<Criterion> criteria{
        {1, "chromatic facts of C9 and M(C9)", 10, criterion1},
        {2, "fractional chromatic closed forms", 60, criterion2},
        {3, "expansion examples", 300, criterion3},
        {4, "displayed J^4 component", extended ? 4 * 3600.0 : 900, [&](Outcome &o) { criterion4(o, extended); }},
        {5, "component/critical-subgraph correspondence", 600, criterion5},
        {6, "b-fold number via cover ideal membership", 600, criterion6},
        {7, "persistence sweep", 1800, criterion7},
        {8, "property suites", 1200, criterion8},
        {9, "expansion at independent sets of critical graphs", 1800, criterion9},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        if (only && c.id != only) continue;
        Outcome o;
        auto start = Clock::now();
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.ok = false;
            o.notes << " [exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > c.limit_s) {
            o.ok = false;
            o.notes << " [over time limit]";
        }
        failed += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " | " << std::fixed
                  << std::setprecision(3) << secs << " s (limit " << std::setprecision(0) << c.limit_s << " s) |"
                  << o.notes.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
