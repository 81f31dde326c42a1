#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "monores/complex.hpp"
#include "monores/monomial.hpp"
#include "monores/resolution.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random complex over x1..xn with at most max_facets facets (some vertices may
/// lie in no facet). With allow_empty the complex {∅} can come out.
inline monores::SimplicialComplex complex(Rng& rng, std::size_t n, std::size_t max_facets,
                                          bool allow_empty = false)
{
    auto vars = monores::VariableSet::indexed("x", n);
    std::size_t k = uniform(rng, allow_empty ? 0 : 1, max_facets);
    std::vector<monores::VertexMask> picks;
    for (std::size_t i = 0; i < k; ++i)
        picks.push_back(uniform(rng, 1, monores::full_mask(n)));
    std::vector<monores::VertexMask> facets;
    for (auto p : picks) {
        bool covered = std::any_of(picks.begin(), picks.end(), [p](auto q) { return q != p && (p & q) == p; });
        if (!covered && std::find(facets.begin(), facets.end(), p) == facets.end())
            facets.push_back(p);
    }
    std::shuffle(facets.begin(), facets.end(), rng);
    return monores::SimplicialComplex(vars, std::move(facets));
}

inline monores::Monomial monomial(Rng& rng, const monores::VarsPtr& vars, unsigned max_exp)
{
    std::vector<unsigned> e(vars->size());
    for (auto& x : e)
        x = static_cast<unsigned>(uniform(rng, 0, max_exp));
    return monores::Monomial(vars, std::move(e));
}

/// Random ideal over a fixed variable set; generators redrawn while unit.
inline monores::MonomialIdeal ideal(Rng& rng, const monores::VarsPtr& vars, std::size_t max_gens, unsigned max_exp)
{
    std::vector<monores::Monomial> gens;
    std::size_t q = uniform(rng, 1, max_gens);
    while (gens.size() < q) {
        auto m = monomial(rng, vars, max_exp);
        if (!m.is_one())
            gens.push_back(std::move(m));
    }
    return monores::minimalize(gens);
}

/// Labeled tree on q vertices decoded from a Prüfer code of length q - 2.
inline std::vector<monores::Edge> tree_from_code(std::size_t q, const std::vector<std::size_t>& code)
{
    std::vector<monores::Edge> edges;
    if (q < 2)
        return edges;
    std::vector<std::size_t> degree(q, 1);
    for (auto c : code)
        ++degree[c];
    for (auto c : code) {
        std::size_t leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        --degree[leaf];
        --degree[c];
    }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < q; ++v)
        if (degree[v] == 1)
            last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return edges;
}

/// Every labeled tree on q vertices (q^(q-2) of them).
inline std::vector<std::vector<monores::Edge>> all_trees(std::size_t q)
{
    std::vector<std::vector<monores::Edge>> out;
    if (q < 2) {
        out.emplace_back();
        return out;
    }
    std::vector<std::size_t> code(q - 2, 0);
    while (true) {
        out.push_back(tree_from_code(q, code));
        std::size_t k = 0;
        while (k < code.size() && ++code[k] == q)
            code[k++] = 0;
        if (k == code.size())
            return out;
    }
}

/// Uniform random labeled tree on q vertices from a random Prüfer code.
inline std::vector<monores::Edge> tree_edges(Rng& rng, std::size_t q)
{
    std::vector<std::size_t> code(q < 2 ? 0 : q - 2);
    for (auto& c : code)
        c = uniform(rng, 0, q - 1);
    return tree_from_code(q, code);
}

inline monores::IntMatrix int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound)
{
    monores::IntMatrix m(rows, cols);
    std::uniform_int_distribution<long long> d(-bound, bound);
    for (auto& x : m.data)
        x = d(rng);
    return m;
}

}  // namespace gen
