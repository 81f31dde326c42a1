#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monores/complex.hpp"
#include "monores/homology.hpp"
#include "monores/monomial.hpp"
#include "monores/resolution.hpp"

namespace monores {

/// The three statements compared for one squarefree ideal I with Δ = N(I^∨):
/// pd(I) ≤ 1, Δ is a quasi-forest, and a graph tree supports a minimal
/// resolution of S/I.
struct EquivalenceReport {
    MonomialIdeal ideal;
    SimplicialComplex dual;
    BettiTable betti;
    std::size_t pd = 0;  ///< pd(I)
    std::optional<std::vector<std::size_t>> leaf_order;
    bool connected = false;
    /// build_tree output, present when Δ is a quasi-forest.
    std::optional<LabeledComplex> tree;
    bool tree_supports_minimal = false;
    /// Result of the brute-force spanning-tree search; nullopt above its guard.
    std::optional<bool> brute_force;

    bool pd_at_most_one() const { return pd <= 1; }
    bool quasi_forest() const { return leaf_order.has_value(); }
    /// All available statements agree.
    bool consistent() const;
};

EquivalenceReport check_equivalence(const MonomialIdeal& ideal);

/// Facets after applying the best vertex permutation: the lexicographically
/// smallest sorted list of facet masks.
std::vector<VertexMask> canonical_form(const SimplicialComplex& d);

/// Every complex over x1..xn whose vertex set is all of x1..xn. With
/// `up_to_isomorphism` one canonical representative per relabeling class.
/// Guard: n ≤ 5.
std::vector<SimplicialComplex> enumerate_complexes(std::size_t n, bool up_to_isomorphism = true);

struct CensusOptions {
    std::size_t max_vertices = 4;
    /// Complexes up to this many vertices also get the resolution checks.
    std::size_t equivalence_max_vertices = 4;
    bool up_to_isomorphism = true;
    /// 0 lets OpenMP decide.
    int workers = 0;
};

struct Discrepancy {
    std::string check;
    SimplicialComplex complex;
    std::string detail;
};

struct InstanceResult {
    SimplicialComplex complex;
    bool full_simplex = false;
    bool quasi_forest = false;
    bool connected = false;
    bool simplicial_forest = false;
    bool equivalence_checked = false;
    /// pd(N(Δ^∨)) when the equivalence was checked.
    std::optional<std::size_t> pd;
    std::size_t trees_checked = 0;
    std::vector<Discrepancy> discrepancies;
};

/// Runs every per-complex invariant; resolution-level checks only when
/// `equivalence` is set and Δ is not the full simplex.
InstanceResult check_instance(const SimplicialComplex& d, bool equivalence);

struct CensusReport {
    std::vector<std::size_t> complexes_by_vertices;  ///< index n
    std::size_t complexes = 0;
    std::size_t quasi_forests = 0;
    std::size_t quasi_trees = 0;
    std::size_t simplicial_forests = 0;
    std::size_t equivalence_instances = 0;
    std::size_t pd_at_most_one = 0;
    std::size_t trees_checked = 0;
    /// A quasi-forest that is not a simplicial forest, if the census has one.
    std::optional<SimplicialComplex> quasi_forest_not_forest;
    std::vector<InstanceResult> instances;
    std::vector<Discrepancy> discrepancies;
};

/// Instances are distributed over OpenMP threads and merged in input order.
CensusReport run_census(const CensusOptions& options);
/// Serial reference of run_census().
CensusReport run_census_serial(const CensusOptions& options);

/// Random squarefree ideal on x1..xn, n drawn from [1, max_vars], with at most
/// max_generators minimal generators.
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_generators);
/// Random ideal on x1..xn, n drawn from [1, max_vars], exponents ≤ max_exponent,
/// redrawn until it is not squarefree. Requires max_exponent ≥ 2.
MonomialIdeal random_nonsquarefree_ideal(std::mt19937_64& rng, std::size_t max_vars, unsigned max_exponent,
                                         std::size_t max_generators);

}  // namespace monores
