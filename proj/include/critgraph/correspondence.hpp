#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/ideal.hpp"

namespace critgraph {

/// Raised when a check that holds for every input by a proven statement
/// fails; it signals a bug, never a finding.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A component of the decomposition of J(G)^s and the shadow set it selects
/// in the s-th expansion.
struct ComponentCorrespondence {
    IrreducibleIdeal component;
    std::size_t s = 1;
    VertexSet y;                ///< indices into power_expansion(G, s)
    bool verified_critical = false;
    std::size_t chi = 0;        ///< chromatic number of the induced subgraph
};

struct UnmatchedCandidate {
    IrreducibleIdeal exponents; ///< exponent vector whose shadow set is critical
    VertexSet y;
};

struct CorrespondenceReport {
    std::size_t s = 1;
    std::vector<ComponentCorrespondence> components;
    bool converse_checked = false;
    std::size_t candidates_examined = 0;
    std::size_t critical_candidates = 0;
    std::vector<UnmatchedCandidate> unmatched; ///< critical shadow sets without a component

    std::size_t mismatches() const;
    bool ok() const { return mismatches() == 0; }
};

/// Shadows (i, 1..s - a_i + 1) of every i in the support, as indices of
/// power_expansion(G, s). Throws IdealError unless 1 <= a_i <= s.
VertexSet component_to_Y(const IrreducibleIdeal &component, std::size_t s);

/// Decomposes J(G)^s and checks each component's shadow set induces a
/// critically (s+1)-chromatic subgraph of G^s. With `converse`, also scans
/// every exponent vector with entries in [0, s] and confirms that each
/// critically (s+1)-chromatic shadow set has its component.
CorrespondenceReport verify_correspondence(const Graph &g, std::size_t s, bool converse = true);

struct PersistenceResult {
    std::size_t s = 1;
    bool holds = true;
    std::vector<VertexSet> missing;   ///< primes of J^s absent for J^(s+1)
    std::vector<VertexSet> primes;    ///< Ass(R/J^s)
    std::vector<VertexSet> next_primes;
    Decomposition decomposition;      ///< of J^s
    Decomposition next_decomposition; ///< of J^(s+1)
};

/// Compares Ass(R/J^s) with Ass(R/J^(s+1)) for J = J(G).
PersistenceResult persistence_check(const Graph &g, std::size_t s);

struct SweepEntry {
    std::size_t graph_index = 0;
    std::vector<PersistenceResult> checks; ///< s = 1..s_max
};

struct SweepReport {
    std::size_t s_max = 1;
    std::vector<SweepEntry> entries;
    /// (graph index, s) of every failed check, in sweep order.
    std::vector<std::pair<std::size_t, std::size_t>> failures;
};

/// Runs persistence_check for s = 1..s_max on every graph. Failures are
/// collected, never thrown.
SweepReport persistence_sweep(const std::vector<Graph> &graphs, std::size_t s_max);

struct ConjectureWitness {
    VertexSet w;
    bool is_maximal_independent = false;
    std::size_t expanded_chi = 0;
    bool expanded_critical = false; ///< implies expanded_chi = chi(G) + 1
};

/// Expands G at W and reports chi(G[W]) and whether G[W] is critically
/// (chi(G) + 1)-chromatic. Throws InvariantViolation if G is critical, W is
/// a maximal independent set, chi rises by one, and yet G[W] is not critical.
ConjectureWitness probe_expansion(const Graph &g, const VertexSet &w);

enum class SearchMode { maximal_independent_only, all_subsets };

struct ConjectureSearchResult {
    bool found = false;
    std::optional<ConjectureWitness> witness;
    bool exhausted = false;
    std::size_t candidates_tried = 0;
};

/// First W, in canonical order, whose expansion of the critical graph G is
/// critically (chi(G) + 1)-chromatic. Maximal independent sets are tried
/// first (lexicographically), then, in all_subsets mode, the remaining
/// subsets by size and lexicographic order. Throws GraphError when G is not
/// critical.
ConjectureSearchResult conjecture_search(const Graph &g, SearchMode mode);

struct TechnicalLemmaResult {
    bool holds = false;
    std::size_t d = 0;      ///< chi_b(G[W])
    Monomial monomial;      ///< (x_1...x_n)^(d-b) / m_W^b
};

/// Checks (x_1...x_n)^(d-b) / m_W^b ∈ J(G)^d for d = chi_b(G[W]).
/// A negative exponent throws InvariantViolation.
TechnicalLemmaResult technical_lemma_check(const Graph &g, const VertexSet &w, std::size_t b);

/// Replays the persistence argument for one component of J(G)^s: finds W in
/// the critical shadow graph H, counts shadows b_i of each vertex inside W,
/// and confirms the lifted component (x_i^(a_i - b_i + 1)) of J(G)^(s+1).
struct ComponentLift {
    VertexSet w;                   ///< indices into the shadow graph H
    std::vector<std::size_t> shift; ///< b_i per variable
    bool shifts_bounded = false;   ///< 0 <= b_i <= a_i
    bool isomorphic = false;       ///< H[W] ≅ (G^(s+1))_{Y'}
    IrreducibleIdeal lifted;
    bool lifted_present = false;
    bool ok() const { return shifts_bounded && isomorphic && lifted_present; }
};

std::optional<ComponentLift> lift_component(const Graph &g, std::size_t s, const IrreducibleIdeal &component,
                                            const Decomposition &next_decomposition);

} // namespace critgraph
