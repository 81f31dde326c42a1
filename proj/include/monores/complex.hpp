#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monores/monomial.hpp"

namespace monores {

/// A simplicial complex given by its facets over a named vertex universe.
///
/// Facets are kept in presentation order because leaf orders and generator
/// correspondences index into that list; equality ignores the order. The
/// universe may contain vertices lying in no facet (needed when the complex
/// comes out of a duality operation). A complex with no facets is {∅}, the
/// complex whose only face is the empty set.
class SimplicialComplex {
public:
    /// Throws unless the facets are nonempty, distinct, inside the universe and
    /// pairwise incomparable.
    SimplicialComplex(VarsPtr universe, std::vector<VertexMask> facets);

    static SimplicialComplex from_names(VarsPtr universe,
                                        const std::vector<std::vector<std::string>>& facets);

    const VarsPtr& universe() const { return universe_; }
    VertexMask universe_mask() const { return full_mask(universe_->size()); }
    std::span<const VertexMask> facets() const { return facets_; }
    VertexMask facet(std::size_t i) const { return facets_.at(i); }
    std::size_t facet_count() const { return facets_.size(); }
    bool is_empty() const { return facets_.empty(); }
    /// V(Δ): union of the facets.
    VertexMask vertex_mask() const;
    int dimension() const;
    bool contains_face(VertexMask face) const;
    std::optional<std::size_t> facet_index(VertexMask facet) const;

    /// Facets sorted lexicographically by their sorted vertex lists.
    std::vector<VertexMask> canonical_facets() const;
    std::string to_string() const;
    std::string facet_to_string(VertexMask facet) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    VarsPtr universe_;
    std::vector<VertexMask> facets_;
};

/// Compares two vertex sets by their ascending index lists.
bool lex_less(VertexMask a, VertexMask b);

/// All nonempty faces, ordered by size then lexicographically.
std::vector<VertexMask> faces(const SimplicialComplex& d);
std::vector<std::size_t> f_vector(const SimplicialComplex& d);

/// Δ_W over the universe W (re-indexed). Faces of no vertex in W give {∅}.
SimplicialComplex induced(const SimplicialComplex& d, VertexMask w);
SimplicialComplex induced(const SimplicialComplex& d, std::span<const std::string> names);

SimplicialComplex subcollection(const SimplicialComplex& d, std::span<const std::size_t> facet_indices);

// Leaves and joints, relative to the sub-collection `members` (bitmask over facet
// indices) of a facet list. These are the primitives for all leaf-order work.
bool is_leaf_within(std::span<const VertexMask> facets, std::uint64_t members, std::size_t f);
std::vector<std::size_t> joints_within(std::span<const VertexMask> facets, std::uint64_t members,
                                       std::size_t f);

std::vector<std::size_t> joints(const SimplicialComplex& d, std::size_t facet);
bool is_leaf(const SimplicialComplex& d, std::size_t facet);
VertexMask free_vertices(const SimplicialComplex& d, std::size_t facet);

enum class LeafOrderMode { Greedy, Exhaustive };

/// A leaf order as facet indices, or nullopt if none exists.
///
/// Greedy peels the smallest-index leaf until one facet is left. Exhaustive is
/// a complete search and returns the lexicographically first leaf order.
std::optional<std::vector<std::size_t>> leaf_order(const SimplicialComplex& d, LeafOrderMode mode);
bool is_leaf_order(const SimplicialComplex& d, std::span<const std::size_t> order);
/// Every leaf order (exponential; desk-scale use).
std::vector<std::vector<std::size_t>> all_leaf_orders(const SimplicialComplex& d);

bool is_quasi_forest(const SimplicialComplex& d);
/// Every nonempty W ⊆ V(Δ) induces a subcomplex with a leaf. Guard: |V(Δ)| ≤ 20.
bool is_quasi_forest_by_induced(const SimplicialComplex& d);
/// Every nonempty subcollection has a leaf. Guard: at most 20 facets.
bool is_simplicial_forest(const SimplicialComplex& d);

bool is_connected(const SimplicialComplex& d);
std::vector<VertexMask> connected_components(const SimplicialComplex& d);

}  // namespace monores
