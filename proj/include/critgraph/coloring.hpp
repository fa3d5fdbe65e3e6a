#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/rational.hpp"

namespace critgraph {

/// b-fold colouring: vertex v receives the b colours assignment[v], each below
/// colors_used. Adjacent vertices receive disjoint colour sets.
struct Coloring {
    std::size_t b = 1;
    std::size_t colors_used = 0;
    std::vector<std::vector<std::size_t>> assignment;
};

/// True iff `c` is a proper b-fold colouring of g with every colour index
/// below c.colors_used and exactly c.b distinct colours per vertex.
bool is_valid_coloring(const Graph &g, const Coloring &c);

struct ChromaticResult {
    std::size_t value = 0;
    std::optional<Coloring> witness; ///< absent only for the empty graph
};

/// Exact chi(G) by iterative deepening over k with DSATUR-ordered
/// backtracking. Colours are tried lowest index first.
ChromaticResult chromatic_number(const Graph &g);

/// A proper colouring with at most k colours, or nothing. Requires k <= 64.
std::optional<Coloring> find_k_coloring(const Graph &g, std::size_t k);

struct CriticalityResult {
    bool critical = false;
    std::size_t chi = 0;
    std::vector<Vertex> failing_vertices; ///< v with chi(G - v) = chi(G)
};

CriticalityResult is_critical(const Graph &g);

/// Exact chi_b(G) as the fewest maximal independent sets (with repetition)
/// covering every vertex at least b times.
ChromaticResult b_fold_chromatic(const Graph &g, std::size_t b);

struct FractionalCertificate {
    std::map<VertexSet, Rational> weights; ///< positive weights on independent sets
    Rational total;
};

struct FractionalResult {
    Rational value;
    FractionalCertificate certificate;
    std::size_t achieving_b = 1; ///< chi_b / b equals value at this b
};

/// Exact chi_f(G) from the rational covering LP over all maximal independent
/// sets. When `cross_check` is set, achieving_b is confirmed with
/// b_fold_chromatic; the reduced denominator is tried first, then the lcm of
/// the certificate's denominators.
FractionalResult fractional_chromatic(const Graph &g, bool cross_check = true);

/// True iff the certificate's sets are independent, each vertex is covered
/// with total weight >= 1, and the weights sum to `total`.
bool is_valid_certificate(const Graph &g, const FractionalCertificate &cert);

/// chi(G) - 1 < chi_f(G) <= chi(G), compared exactly.
bool classify_chi_f_window(const Graph &g);

} // namespace critgraph
