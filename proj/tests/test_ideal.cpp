#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "critgraph/coloring.hpp"
#include "critgraph/ideal.hpp"
#include "oracles.hpp"

using namespace critgraph;

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }
IrreducibleIdeal irr(std::vector<Exponent> e) { return IrreducibleIdeal(std::move(e)); }

MonomialIdeal random_ideal(std::mt19937 &rng) {
    std::size_t n = 1 + rng() % 5, k = 1 + rng() % 6;
    for (;;) {
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Exponent> e(n);
            for (auto &x : e) x = static_cast<Exponent>(rng() % 5);
            gens.emplace_back(e);
        }
        MonomialIdeal ideal(n, gens);
        if (!ideal.is_unit()) return ideal;
    }
}

// m ∈ ideal straight from the generators, without the library's routine.
bool member(const MonomialIdeal &ideal, const Monomial &m) {
    for (const auto &g : ideal.generators())
        if (oracle::divides(g.exponents(), m.exponents())) return true;
    return false;
}

} // namespace

TEST_CASE("monomials") {
    Monomial a = mono({2, 0, 1});
    CHECK(a.str() == "x1^2*x3");
    CHECK(Monomial::one(3).str() == "1");
    CHECK(a.degree() == 3);
    CHECK(a.support() == VertexSet{0, 2});
    CHECK(mono({1, 0, 1}).divides(a));
    CHECK_FALSE(a.divides(mono({1, 0, 1})));
    CHECK(a * mono({0, 1, 1}) == mono({2, 1, 2}));
    CHECK(lcm(a, mono({1, 3, 0})) == mono({2, 3, 1}));
    CHECK(a / mono({1, 0, 1}) == mono({1, 0, 0}));
    CHECK_THROWS_AS(mono({1, 0, 0}) / a, IdealError);
    CHECK_THROWS_AS(mono({0xFFFFFFFFu}) * mono({1}), IdealError);
}

TEST_CASE("monomial ideals are stored minimally") {
    MonomialIdeal ideal(2, {mono({1, 1}), mono({2, 1}), mono({0, 3}), mono({1, 1})});
    CHECK(ideal.generators() == std::vector<Monomial>{mono({0, 3}), mono({1, 1})});
    CHECK(MonomialIdeal(2, {}).is_zero());
    CHECK(MonomialIdeal(2, {mono({0, 0}), mono({1, 0})}).is_unit());
    CHECK(ideal.str() == "(x2^3, x1*x2)");
    CHECK_THROWS_AS(MonomialIdeal(2, {mono({1})}), IdealError);
}

TEST_CASE("irreducible ideals") {
    IrreducibleIdeal q = irr({2, 0, 1});
    CHECK(q.support() == VertexSet{0, 2});
    CHECK(q.terms() == std::vector<std::string>{"x1^2", "x3"});
    CHECK(q.str() == "(x1^2, x3)");
    CHECK(q.contains(mono({0, 5, 1})));
    CHECK_FALSE(q.contains(mono({1, 5, 0})));
    CHECK(q.contains(irr({3, 0, 1})));
    CHECK(irr({2, 4, 1}).contains(q));
    CHECK_FALSE(q.contains(irr({2, 4, 1})));
    CHECK(q.contains(irr({2, 0, 0})));
    CHECK_FALSE(q.contains(irr({1, 0, 1})));
    CHECK_FALSE(irr({2, 0, 0}).contains(q));
}

TEST_CASE("cover_ideal") {
    Graph c5 = family(Family::cycle, 5);
    MonomialIdeal j = cover_ideal(c5);
    CHECK(j.generators().size() == 5);
    CHECK(j.is_squarefree());
    std::vector<VertexSet> supports;
    for (const auto &g : j.generators()) supports.push_back(g.support());
    std::sort(supports.begin(), supports.end());
    CHECK(supports == oracle::minimal_vertex_covers(c5));

    MonomialIdeal k3 = cover_ideal(family(Family::complete, 3));
    CHECK(k3.str() == "(x2*x3, x1*x3, x1*x2)");

    CHECK_THROWS_AS(cover_ideal(edgeless(3)), IdealError);
    CHECK_THROWS_AS(cover_ideal(Graph::from_edges(3, {{0, 1}})), IdealError);
}

TEST_CASE("cover ideal generators are the minimal vertex covers on random graphs") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph_without_isolated(2 + rng() % 7, 0.4, rng);
        MonomialIdeal j = cover_ideal(g);
        std::vector<VertexSet> supports;
        for (const auto &m : j.generators()) supports.push_back(m.support());
        std::sort(supports.begin(), supports.end());
        CHECK(supports == oracle::minimal_vertex_covers(g));
    }
}

TEST_CASE("ideal operations") {
    MonomialIdeal a(2, {mono({1, 0})}), b(2, {mono({0, 1})});
    CHECK(multiply(a, b) == MonomialIdeal(2, {mono({1, 1})}));
    CHECK(intersect(a, b) == MonomialIdeal(2, {mono({1, 1})}));
    CHECK(sum(a, b).generators().size() == 2);
    MonomialIdeal m = sum(a, b);
    CHECK(power(m, 2) == MonomialIdeal(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})}));
    CHECK_THROWS_AS(power(m, 0), IdealError);
    CHECK_THROWS_AS(multiply(a, MonomialIdeal(3, {mono({1, 0, 0})})), IdealError);
}

TEST_CASE("power generators agree with brute force") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal ideal = random_ideal(rng);
        for (std::size_t d = 1; d <= 3; ++d) {
            MonomialIdeal p = power(ideal, d);
            std::vector<std::vector<Exponent>> gens;
            for (const auto &g : p.generators()) gens.push_back(g.exponents());
            std::sort(gens.begin(), gens.end());
            CHECK(gens == oracle::power_generators(ideal, d));
        }
    }
}

TEST_CASE("contains_in_power agrees with brute force") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        MonomialIdeal ideal = random_ideal(rng);
        if (ideal.nvars() > 3) continue;
        for (std::size_t d = 1; d <= 3; ++d)
            for (const auto &m : oracle::box(ideal.nvars(), 5)) {
                bool want = oracle::power_contains(ideal, d, m);
                CHECK(contains_in_power(ideal, d, m) == want);
                CHECK(contains(power(ideal, d), m) == want);
            }
    }
    // (x1...x5)^2 lies in J(C5)^2: two covers of a 5-cycle never overlap twice.
    MonomialIdeal j = cover_ideal(family(Family::cycle, 5));
    CHECK(contains_in_power(j, 2, Monomial::uniform(5, 2)));
    CHECK(oracle::power_contains(j, 2, Monomial::uniform(5, 2)));
    CHECK_FALSE(contains_in_power(j, 2, Monomial::uniform(5, 1)));
}

TEST_CASE("irreducible_decomposition of small ideals") {
    // (x1^2, x1 x2, x2^3) = (x1, x2^3) ∩ (x1^2, x2)
    MonomialIdeal ideal(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})});
    Decomposition want{irr({1, 3}), irr({2, 1})};
    CHECK(irreducible_decomposition(ideal) == want);
    CHECK(irreducible_decomposition(ideal, DecompositionMethod::incremental) == want);

    // Edge ideal of a path: (x1 x2, x2 x3) = (x2) ∩ (x1, x3).
    MonomialIdeal path(3, {mono({1, 1, 0}), mono({0, 1, 1})});
    CHECK(irreducible_decomposition(path) == Decomposition{irr({1, 0, 1}), irr({0, 1, 0})});

    MonomialIdeal pure(2, {mono({3, 0})});
    CHECK(irreducible_decomposition(pure) == Decomposition{irr({3, 0})});

    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(2, {})), IdealError);
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(2, {Monomial::one(2)})), IdealError);
}

TEST_CASE("cover ideal decomposes into the edge primes") {
    for (const Graph &g : {family(Family::cycle, 5), family(Family::complete, 4), oracle::petersen()}) {
        Decomposition d = irreducible_decomposition(cover_ideal(g));
        Decomposition want;
        for (auto [u, v] : g.edges()) {
            std::vector<Exponent> e(g.size(), 0);
            e[u] = e[v] = 1;
            want.emplace_back(e);
        }
        std::sort(want.begin(), want.end());
        CHECK(d == want);
    }
}

TEST_CASE("decomposition matches the membership oracle on random ideals") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        MonomialIdeal ideal = random_ideal(rng);
        Decomposition d = irreducible_decomposition(ideal);
        Decomposition again = irreducible_decomposition(ideal, DecompositionMethod::incremental);
        CHECK(d == again);
        CHECK(prune_redundant(d) == d);
        Exponent bound = oracle::max_exponent(ideal) + 1;
        for (const auto &m : oracle::box(ideal.nvars(), bound)) CHECK(contains(d, m) == member(ideal, m));
        for (const auto &c : d) CHECK(is_irreducible_component(ideal, c));
    }
}

TEST_CASE("decomposition does not depend on generator order") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal ideal = random_ideal(rng);
        auto gens = ideal.generators();
        Decomposition want = irreducible_decomposition(ideal);
        for (int k = 0; k < 3; ++k) {
            std::shuffle(gens.begin(), gens.end(), rng);
            CHECK(irreducible_decomposition(MonomialIdeal(ideal.nvars(), gens)) == want);
        }
    }
}

TEST_CASE("prune_redundant") {
    // (x1, x2) contains (x1); (x1^2, x2) does not.
    Decomposition d{irr({1, 1}), irr({2, 1}), irr({1, 0}), irr({1, 0})};
    CHECK(prune_redundant(d) == Decomposition{irr({1, 0}), irr({2, 1})});
}

TEST_CASE("associated primes of cover ideal powers") {
    MonomialIdeal j = cover_ideal(family(Family::cycle, 5));
    CHECK(associated_primes(j).size() == 5);
    auto ass2 = associated_primes(power(j, 2));
    CHECK(ass2.size() == 6);
    CHECK(ass2.back() == VertexSet{3, 4});
    CHECK(std::find(ass2.begin(), ass2.end(), VertexSet{0, 1, 2, 3, 4}) != ass2.end());
}

TEST_CASE("component counts of cover ideal powers") {
    // Frozen from the splitting engine and confirmed by the corner test below.
    MonomialIdeal c7 = cover_ideal(family(Family::cycle, 7));
    const std::size_t counts[] = {7, 15, 28, 56};
    for (std::size_t s = 1; s <= 4; ++s) {
        Decomposition d = irreducible_decomposition(power(c7, s));
        CHECK(d.size() == counts[s - 1]);
        CHECK(d == irreducible_decomposition(power(c7, s), DecompositionMethod::incremental));
        for (const auto &c : d) {
            CHECK(is_component_of_power(c7, s, c));
            for (auto e : c.exponents()) CHECK(e <= s);
        }
    }
}

TEST_CASE("is_component_of_power rejects non-components") {
    MonomialIdeal j = cover_ideal(family(Family::cycle, 5));
    CHECK(is_component_of_power(j, 1, irr({1, 1, 0, 0, 0})));
    CHECK_FALSE(is_component_of_power(j, 1, irr({1, 0, 1, 0, 0})));
    CHECK(is_component_of_power(j, 2, irr({2, 2, 2, 2, 2})));
    CHECK_FALSE(is_component_of_power(j, 2, irr({2, 2, 2, 2, 1})));
    CHECK_FALSE(is_component_of_power(j, 2, irr({0, 0, 0, 0, 0})));
}

TEST_CASE("b_fold_via_membership agrees with the definition") {
    for (const Graph &g : {family(Family::cycle, 5), family(Family::complete, 3), family(Family::path, 3)})
        for (std::size_t b = 1; b <= 3; ++b) CHECK(b_fold_via_membership(g, b) == oracle::b_fold_chromatic(g, b));
    CHECK_THROWS_AS(b_fold_via_membership(family(Family::cycle, 5), 0), IdealError);
}
