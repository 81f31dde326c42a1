#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monores/complex.hpp"
#include "monores/monomial.hpp"

namespace monores {

using Edge = std::pair<std::size_t, std::size_t>;

/// A simplicial complex whose vertex i carries the monomial label i.
///
/// The complex lives over the universe v1..vt, one vertex per label, and
/// every vertex lies in some facet. The label of a face is the lcm of its
/// vertex labels.
class LabeledComplex {
public:
    LabeledComplex(SimplicialComplex complex, std::vector<Monomial> labels);

    /// Graph with the given edges; vertices on no edge become isolated facets.
    static LabeledComplex graph(std::vector<Monomial> labels, std::span<const Edge> edges);
    /// The full simplex on the labels (support of the Taylor complex).
    static LabeledComplex simplex(std::vector<Monomial> labels);

    const SimplicialComplex& complex() const { return complex_; }
    std::span<const Monomial> labels() const { return labels_; }
    const Monomial& label(std::size_t v) const { return labels_.at(v); }
    std::size_t vertex_count() const { return labels_.size(); }
    Monomial face_label(VertexMask face) const;

    bool is_graph() const { return complex_.dimension() <= 1; }
    /// Edges (i < j) in facet order; empty for a single vertex.
    std::vector<Edge> edges() const;
    bool is_tree() const;

private:
    SimplicialComplex complex_;
    std::vector<Monomial> labels_;
};

struct DifferentialEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    int sign = 1;
    Monomial monomial;

    friend bool operator==(const DifferentialEntry&, const DifferentialEntry&) = default;
};

/// Chain complex of multigraded free modules 0 ← F_0 ← F_1 ← ... ← F_length.
///
/// module(i) lists the multidegrees of the basis of F_i; differential(i) is the
/// sparse matrix of d_i : F_i → F_{i-1} with rows indexing F_{i-1}.
class FreeComplex {
public:
    FreeComplex(std::vector<std::vector<Monomial>> modules,
                std::vector<std::vector<DifferentialEntry>> differentials);

    std::size_t length() const { return modules_.size() - 1; }
    std::vector<std::size_t> ranks() const;
    std::span<const Monomial> module(std::size_t i) const { return modules_.at(i); }
    std::span<const DifferentialEntry> differential(std::size_t i) const;
    const VarsPtr& vars() const { return modules_.front().front().vars(); }

    /// d_{i} ∘ d_{i+1} = 0 for all i, checked on signed monomial sums.
    bool composes_to_zero() const;
    /// Every differential entry lies in the maximal ideal.
    bool has_nonunit_entries() const;

    friend bool operator==(const FreeComplex& a, const FreeComplex& b);

private:
    std::vector<std::vector<Monomial>> modules_;
    std::vector<std::vector<DifferentialEntry>> differentials_;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    long long& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    long long at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// A FreeComplex with every variable set to 1.
struct Frame {
    std::vector<std::size_t> dims;
    /// differentials[i-1] is d_i : k^{dims[i]} → k^{dims[i-1]}.
    std::vector<IntMatrix> differentials;
};

struct Graph {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    bool is_tree() const;
};

/// Faces ordered by size then lexicographically; boundary sign (-1)^k for the
/// k-th vertex (ascending index) removed.
FreeComplex homogenize(const LabeledComplex& labeled);
/// Guard: at most 20 generators.
FreeComplex taylor(const MonomialIdeal& ideal);

/// lcm of every nonempty subset of the monomials, sorted, without duplicates.
std::vector<Monomial> lcm_lattice(std::span<const Monomial> monomials);
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

/// Every lcm-lattice element m induces a connected subcomplex on the vertices
/// whose labels divide m. Throws std::invalid_argument if the complex is not a
/// simplicial forest.
bool supports_resolution(const LabeledComplex& labeled);
/// The same test restricted to pairwise lcms (and single labels).
bool supports_resolution_pairwise(const LabeledComplex& labeled);
/// No face label equals the label of a proper subface.
bool is_minimal_support(const LabeledComplex& labeled);

/// Graph tree for N(Δ^∨) built along a leaf order of Δ: each facet is joined
/// to a joint it has in the prefix subcollection. Vertex i is labeled by the
/// product of the variables outside facet i. Uses the exhaustive leaf order
/// unless one is given; throws if Δ is not a quasi-forest or `order` is not a
/// leaf order.
LabeledComplex build_tree(const SimplicialComplex& d,
                          std::optional<std::vector<std::size_t>> order = std::nullopt);
/// Every tree obtainable from one leaf order over all joint choices.
std::vector<LabeledComplex> build_trees(const SimplicialComplex& d, std::span<const std::size_t> order);
/// Every tree obtainable over all leaf orders and joint choices, deduplicated.
std::vector<LabeledComplex> enumerate_trees(const SimplicialComplex& d);

/// Kruskal-style nested spanning forests of the lcm-labeled complete graph,
/// ordered by (lcm degree, row, col). Throws if the ideal is not squarefree or
/// its pd exceeds 1 (tested through the dual quasi-forest).
LabeledComplex floystad_tree(const MonomialIdeal& ideal);

/// For each degree i, the part of the tree with label degree ≤ i is a spanning
/// forest of the complete graph's part of degree ≤ i.
bool satisfies_degree_filtration(const LabeledComplex& tree);

/// Brute force over all labeled spanning trees of K_q (Prüfer codes): a tree
/// supporting a minimal resolution, if any. Guard: q ≤ 8.
std::optional<LabeledComplex> find_supporting_tree(const MonomialIdeal& ideal);

Frame frame(const FreeComplex& complex);
/// Reads the graph off a length-2 frame whose degree-2 columns each hold one +1
/// and one -1; nullopt when a column has another shape.
std::optional<Graph> frame_to_graph(const Frame& f);

}  // namespace monores
