#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

using Exponent = std::uint32_t;

class IdealError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Monomial x_1^e_1 ... x_n^e_n over a fixed number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    /// 1 in n variables.
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
    /// (x_1 ... x_n)^e.
    static Monomial uniform(std::size_t nvars, Exponent e) { return Monomial(std::vector<Exponent>(nvars, e)); }
    /// Product of the variables in s.
    static Monomial squarefree(std::size_t nvars, const VertexSet &s);

    std::size_t nvars() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent> &exponents() const { return exps_; }

    std::uint64_t degree() const;
    VertexSet support() const;
    bool is_one() const;
    bool divides(const Monomial &other) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend Monomial lcm(const Monomial &a, const Monomial &b);

    /// a / b; throws IdealError when b does not divide a.
    friend Monomial operator/(const Monomial &a, const Monomial &b);

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

    /// "x1^2*x3", or "1".
    std::string str() const;

private:
    std::vector<Exponent> exps_;
};

/// Monomial ideal stored by its minimal generators in lexicographic order.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Minimalises `gens`; all must have `nvars` variables.
    MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial> &generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_squarefree() const;

    friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

    std::string str() const;

private:
    std::size_t nvars_ = 0;
    std::vector<Monomial> gens_;
};

/// Irreducible ideal (x_i^{a_i} : a_i >= 1). Stored densely: exponent 0 marks
/// a variable outside the support.
class IrreducibleIdeal {
public:
    IrreducibleIdeal() = default;
    explicit IrreducibleIdeal(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    std::size_t nvars() const { return exps_.size(); }
    Exponent exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent> &exponents() const { return exps_; }
    VertexSet support() const;

    bool contains(const Monomial &m) const;
    /// Ideal containment this ⊇ other.
    bool contains(const IrreducibleIdeal &other) const;

    /// Orders by support first, then by exponents.
    friend std::strong_ordering operator<=>(const IrreducibleIdeal &a, const IrreducibleIdeal &b);
    friend bool operator==(const IrreducibleIdeal &, const IrreducibleIdeal &) = default;

    /// Pure powers such as {"x1^2", "x3"} in variable order.
    std::vector<std::string> terms() const;
    /// "(x1^2, x3)".
    std::string str() const;

private:
    std::vector<Exponent> exps_;
};

using Decomposition = std::vector<IrreducibleIdeal>;

/// Cover ideal of g, computed as the intersection of the edge primes
/// (x_i, x_j). Requires at least one edge and no isolated vertices.
MonomialIdeal cover_ideal(const Graph &g);

MonomialIdeal multiply(const MonomialIdeal &a, const MonomialIdeal &b);
MonomialIdeal intersect(const MonomialIdeal &a, const MonomialIdeal &b);
MonomialIdeal sum(const MonomialIdeal &a, const MonomialIdeal &b);
MonomialIdeal power(const MonomialIdeal &ideal, std::size_t s);

bool contains(const MonomialIdeal &ideal, const Monomial &m);

/// Whether m is divisible by a product of d generators of `ideal`, i.e.
/// m ∈ ideal^d, decided without forming the power.
bool contains_in_power(const MonomialIdeal &ideal, std::size_t d, const Monomial &m);

/// min { d : (x_1 ... x_n)^(d - b) ∈ J(g)^d }.
std::size_t b_fold_via_membership(const Graph &g, std::size_t b);

enum class DecompositionMethod {
    splitting,   ///< recursive splitting x^u*x^v -> (x^u) and (x^v), memoised
    incremental, ///< adds generators one at a time to a set of corners
};

/// Unique irredundant irreducible decomposition of a proper nonzero ideal,
/// in canonical order. Both methods return the same result; the incremental
/// one scales to ideals with hundreds of thousands of generators.
Decomposition irreducible_decomposition(const MonomialIdeal &ideal,
                                        DecompositionMethod method = DecompositionMethod::splitting);

/// Whether `component` is one of the irredundant irreducible components of
/// `ideal`, decided by membership tests on its corner without decomposing.
bool is_irreducible_component(const MonomialIdeal &ideal, const IrreducibleIdeal &component);

/// Same test for ideal^s, using contains_in_power instead of forming the power.
bool is_component_of_power(const MonomialIdeal &ideal, std::size_t s, const IrreducibleIdeal &component);

/// Drops duplicates and every component that contains another one, then
/// sorts canonically.
Decomposition prune_redundant(Decomposition components);

/// Supports of the decomposition components, deduplicated, lexicographic.
std::vector<VertexSet> associated_primes(const MonomialIdeal &ideal);
std::vector<VertexSet> associated_primes(const Decomposition &components);

/// Whether m lies in every component.
bool contains(const Decomposition &components, const Monomial &m);

} // namespace critgraph
