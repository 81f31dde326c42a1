#include "monores/resolution.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "monores/duality.hpp"

namespace monores {

namespace {

constexpr std::size_t kMaxTaylorGenerators = 20;
constexpr std::size_t kMaxTreeSearchGenerators = 8;

VertexMask vbit(std::size_t i) { return VertexMask{1} << i; }

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

Edge ordered(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

// ---------------------------------------------------------------------------

LabeledComplex::LabeledComplex(SimplicialComplex complex, std::vector<Monomial> labels)
    : complex_(std::move(complex)), labels_(std::move(labels))
{
    if (labels_.empty())
        throw std::invalid_argument("a labeled complex needs at least one vertex");
    if (complex_.universe()->size() != labels_.size())
        throw std::invalid_argument("one label per vertex is required");
    if (complex_.vertex_mask() != complex_.universe_mask())
        throw std::invalid_argument("every labeled vertex must lie in a facet");
    for (const auto& l : labels_) {
        if (!same_vars(l.vars(), labels_.front().vars()))
            throw std::invalid_argument("labels are over different variable sets");
        if (l.is_one())
            throw std::invalid_argument("labels must be non-unit monomials");
    }
}

LabeledComplex LabeledComplex::graph(std::vector<Monomial> labels, std::span<const Edge> edges)
{
    std::size_t t = labels.size();
    if (t == 0)
        throw std::invalid_argument("a graph needs at least one vertex");
    std::vector<VertexMask> facets;
    VertexMask covered = 0;
    for (auto [a, b] : edges) {
        if (a >= t || b >= t || a == b)
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") is not between two distinct vertices");
        facets.push_back(vbit(a) | vbit(b));
        covered |= vbit(a) | vbit(b);
    }
    for (std::size_t v = 0; v < t; ++v)
        if (!(covered & vbit(v)))
            facets.push_back(vbit(v));
    return LabeledComplex(SimplicialComplex(VariableSet::indexed("v", t), std::move(facets)),
                          std::move(labels));
}

LabeledComplex LabeledComplex::simplex(std::vector<Monomial> labels)
{
    std::size_t t = labels.size();
    if (t == 0 || t > kMaxVariables)
        throw std::invalid_argument("simplex needs between 1 and 64 vertices");
    return LabeledComplex(SimplicialComplex(VariableSet::indexed("v", t), {full_mask(t)}),
                          std::move(labels));
}

Monomial LabeledComplex::face_label(VertexMask face) const
{
    Monomial m = Monomial::one(labels_.front().vars());
    for (VertexMask f = face; f; f &= f - 1)
        m = lcm(m, labels_.at(static_cast<std::size_t>(std::countr_zero(f))));
    return m;
}

std::vector<Edge> LabeledComplex::edges() const
{
    std::vector<Edge> out;
    for (auto f : complex_.facets()) {
        if (std::popcount(f) != 2)
            continue;
        auto a = static_cast<std::size_t>(std::countr_zero(f));
        auto b = static_cast<std::size_t>(63 - std::countl_zero(f));
        out.emplace_back(a, b);
    }
    return out;
}

bool LabeledComplex::is_tree() const
{
    return is_graph() && edges().size() + 1 == labels_.size() && is_connected(complex_);
}

bool Graph::is_tree() const
{
    if (vertex_count == 0 || edges.size() + 1 != vertex_count)
        return false;
    DisjointSets sets(vertex_count);
    for (auto [a, b] : edges)
        if (a >= vertex_count || b >= vertex_count || !sets.unite(a, b))
            return false;
    return true;
}

// ---------------------------------------------------------------------------

FreeComplex::FreeComplex(std::vector<std::vector<Monomial>> modules,
                         std::vector<std::vector<DifferentialEntry>> differentials)
    : modules_(std::move(modules)), differentials_(std::move(differentials))
{
    if (modules_.empty() || modules_.front().size() != 1 || !modules_.front().front().is_one())
        throw std::invalid_argument("degree 0 must be the single module S");
    if (differentials_.size() + 1 != modules_.size())
        throw std::invalid_argument("need one differential per positive degree");
    for (std::size_t i = 1; i < modules_.size(); ++i) {
        for (const auto& e : differentials_[i - 1]) {
            if (e.row >= modules_[i - 1].size() || e.col >= modules_[i].size())
                throw std::invalid_argument("differential entry out of range in degree " +
                                            std::to_string(i));
            if (e.sign != 1 && e.sign != -1)
                throw std::invalid_argument("differential signs must be +1 or -1");
            if (!(quotient(modules_[i][e.col], modules_[i - 1][e.row]) == e.monomial))
                throw std::invalid_argument("differential entry in degree " + std::to_string(i) +
                                            " is not the multidegree quotient");
        }
    }
}

std::vector<std::size_t> FreeComplex::ranks() const
{
    std::vector<std::size_t> r;
    for (const auto& m : modules_)
        r.push_back(m.size());
    return r;
}

std::span<const DifferentialEntry> FreeComplex::differential(std::size_t i) const
{
    if (i == 0 || i > differentials_.size())
        throw std::out_of_range("no differential in degree " + std::to_string(i));
    return differentials_[i - 1];
}

bool FreeComplex::composes_to_zero() const
{
    for (std::size_t i = 1; i + 1 < modules_.size(); ++i) {
        std::vector<std::vector<const DifferentialEntry*>> by_col(modules_[i].size());
        for (const auto& e : differentials_[i - 1])
            by_col[e.col].push_back(&e);
        std::map<std::tuple<std::size_t, std::size_t, std::vector<unsigned>>, long long> sums;
        for (const auto& outer : differentials_[i]) {
            for (const auto* inner : by_col[outer.row]) {
                Monomial m = inner->monomial * outer.monomial;
                auto exps = m.exponents();
                sums[{inner->row, outer.col, {exps.begin(), exps.end()}}] += inner->sign * outer.sign;
            }
        }
        for (const auto& [key, value] : sums)
            if (value != 0)
                return false;
    }
    return true;
}

bool FreeComplex::has_nonunit_entries() const
{
    for (const auto& d : differentials_)
        for (const auto& e : d)
            if (e.monomial.is_one())
                return false;
    return true;
}

bool operator==(const FreeComplex& a, const FreeComplex& b)
{
    return a.modules_ == b.modules_ && a.differentials_ == b.differentials_;
}

// ---------------------------------------------------------------------------

FreeComplex homogenize(const LabeledComplex& labeled)
{
    const auto& d = labeled.complex();
    std::vector<VertexMask> face_list = faces(d);
    std::size_t top = static_cast<std::size_t>(d.dimension() + 1);

    std::vector<std::vector<VertexMask>> by_size(top + 1);
    std::vector<std::unordered_map<VertexMask, std::size_t>> index(top + 1);
    for (auto f : face_list) {
        auto k = static_cast<std::size_t>(std::popcount(f));
        index[k].emplace(f, by_size[k].size());
        by_size[k].push_back(f);
    }

    std::vector<std::vector<Monomial>> modules(top + 1);
    modules[0].push_back(Monomial::one(labeled.label(0).vars()));
    for (std::size_t k = 1; k <= top; ++k)
        for (auto f : by_size[k])
            modules[k].push_back(labeled.face_label(f));

    std::vector<std::vector<DifferentialEntry>> diffs(top);
    for (std::size_t col = 0; col < by_size[1].size(); ++col)
        diffs[0].push_back({0, col, 1, modules[1][col]});
    for (std::size_t k = 2; k <= top; ++k) {
        for (std::size_t col = 0; col < by_size[k].size(); ++col) {
            VertexMask face = by_size[k][col];
            int position = 0;
            for (VertexMask rest = face; rest; rest &= rest - 1, ++position) {
                VertexMask sub = face & ~(rest & -rest);
                std::size_t row = index[k - 1].at(sub);
                diffs[k - 1].push_back({row, col, position % 2 == 0 ? 1 : -1,
                                        quotient(modules[k][col], modules[k - 1][row])});
            }
        }
    }
    return FreeComplex(std::move(modules), std::move(diffs));
}

FreeComplex taylor(const MonomialIdeal& ideal)
{
    if (ideal.size() > kMaxTaylorGenerators)
        throw std::domain_error("Taylor complex is limited to 20 generators");
    return homogenize(LabeledComplex::simplex({ideal.generators().begin(), ideal.generators().end()}));
}

std::vector<Monomial> lcm_lattice(std::span<const Monomial> monomials)
{
    if (monomials.size() > kMaxTaylorGenerators)
        throw std::domain_error("lcm lattice is limited to 20 generators");
    std::set<Monomial> lattice;
    for (const auto& g : monomials) {
        std::vector<Monomial> fresh{g};
        for (const auto& s : lattice)
            fresh.push_back(lcm(s, g));
        lattice.insert(fresh.begin(), fresh.end());
    }
    return {lattice.begin(), lattice.end()};
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal)
{
    return lcm_lattice(ideal.generators());
}

namespace {

bool divisor_subcomplex_connected(const LabeledComplex& labeled, const Monomial& m)
{
    VertexMask w = 0;
    for (std::size_t v = 0; v < labeled.vertex_count(); ++v)
        if (divides(labeled.label(v), m))
            w |= vbit(v);
    if (w == 0)
        return true;
    return is_connected(induced(labeled.complex(), w));
}

bool connected_for_all(const LabeledComplex& labeled, std::span<const Monomial> degrees)
{
    return std::all_of(degrees.begin(), degrees.end(),
                       [&](const Monomial& m) { return divisor_subcomplex_connected(labeled, m); });
}

void require_forest(const LabeledComplex& labeled)
{
    if (!is_simplicial_forest(labeled.complex()))
        throw std::invalid_argument("not a simplicial forest");
}

// Trees are simplicial forests, so the tree search skips the 2^q forest check.
bool tree_supports_minimal_resolution(const LabeledComplex& tree)
{
    return connected_for_all(tree, lcm_lattice(tree.labels())) && is_minimal_support(tree);
}

}  // namespace

bool supports_resolution(const LabeledComplex& labeled)
{
    require_forest(labeled);
    return connected_for_all(labeled, lcm_lattice(labeled.labels()));
}

bool supports_resolution_pairwise(const LabeledComplex& labeled)
{
    require_forest(labeled);
    std::vector<Monomial> degrees;
    for (std::size_t i = 0; i < labeled.vertex_count(); ++i)
        for (std::size_t j = i; j < labeled.vertex_count(); ++j)
            degrees.push_back(lcm(labeled.label(i), labeled.label(j)));
    return connected_for_all(labeled, degrees);
}

bool is_minimal_support(const LabeledComplex& labeled)
{
    // Labels grow along inclusions, so comparing with codimension-one subfaces suffices.
    for (auto face : faces(labeled.complex())) {
        if (std::popcount(face) < 2)
            continue;
        Monomial m = labeled.face_label(face);
        for (VertexMask rest = face; rest; rest &= rest - 1)
            if (labeled.face_label(face & ~(rest & -rest)) == m)
                return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Monomial> tree_labels(const SimplicialComplex& d)
{
    MonomialIdeal gens = dual_generators(d);
    return {gens.generators().begin(), gens.generators().end()};
}

std::vector<std::size_t> resolve_order(const SimplicialComplex& d,
                                       std::optional<std::vector<std::size_t>> order)
{
    if (d.is_empty())
        throw std::invalid_argument("complex has no facets");
    if (!order) {
        order = leaf_order(d, LeafOrderMode::Exhaustive);
        if (!order)
            throw std::invalid_argument("complex is not a quasi-forest");
    } else if (!is_leaf_order(d, *order)) {
        throw std::invalid_argument("the given facet order is not a leaf order");
    }
    return *order;
}

void collect_trees(const SimplicialComplex& d, std::span<const std::size_t> order, std::size_t pos,
                   std::uint64_t prefix, std::vector<Edge>& edges, std::vector<std::vector<Edge>>& out)
{
    if (pos == order.size()) {
        out.push_back(edges);
        return;
    }
    std::size_t f = order[pos];
    std::uint64_t members = prefix | (std::uint64_t{1} << f);
    for (auto u : joints_within(d.facets(), members, f)) {
        edges.push_back(ordered(f, u));
        collect_trees(d, order, pos + 1, members, edges, out);
        edges.pop_back();
    }
}

}  // namespace

LabeledComplex build_tree(const SimplicialComplex& d, std::optional<std::vector<std::size_t>> order)
{
    auto ord = resolve_order(d, std::move(order));
    std::vector<Edge> edges;
    std::uint64_t prefix = std::uint64_t{1} << ord.front();
    for (std::size_t i = 1; i < ord.size(); ++i) {
        std::size_t f = ord[i];
        prefix |= std::uint64_t{1} << f;
        auto js = joints_within(d.facets(), prefix, f);
        edges.push_back(ordered(f, js.front()));
    }
    return LabeledComplex::graph(tree_labels(d), edges);
}

std::vector<LabeledComplex> build_trees(const SimplicialComplex& d, std::span<const std::size_t> order)
{
    auto ord = resolve_order(d, std::vector<std::size_t>(order.begin(), order.end()));
    std::vector<std::vector<Edge>> edge_sets;
    std::vector<Edge> edges;
    collect_trees(d, ord, 1, std::uint64_t{1} << ord.front(), edges, edge_sets);

    auto labels = tree_labels(d);
    std::set<std::vector<Edge>> seen;
    std::vector<LabeledComplex> out;
    for (auto& es : edge_sets) {
        std::sort(es.begin(), es.end());
        if (seen.insert(es).second)
            out.push_back(LabeledComplex::graph(labels, es));
    }
    return out;
}

std::vector<LabeledComplex> enumerate_trees(const SimplicialComplex& d)
{
    std::set<std::vector<Edge>> seen;
    std::vector<LabeledComplex> out;
    auto labels = tree_labels(d);
    for (const auto& order : all_leaf_orders(d)) {
        for (auto& t : build_trees(d, order)) {
            auto es = t.edges();
            std::sort(es.begin(), es.end());
            if (seen.insert(es).second)
                out.push_back(std::move(t));
        }
    }
    return out;
}

LabeledComplex floystad_tree(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree())
        throw std::invalid_argument("Floystad tree needs a squarefree ideal; polarize first");
    std::vector<Monomial> labels(ideal.generators().begin(), ideal.generators().end());
    std::size_t q = labels.size();
    if (q == 1)
        return LabeledComplex::graph(std::move(labels), {});
    if (!is_quasi_forest(dual_facets(ideal)))
        throw std::invalid_argument("ideal has projective dimension greater than 1");

    std::vector<std::tuple<unsigned, std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j)
            candidates.emplace_back(lcm(labels[i], labels[j]).degree(), i, j);
    std::sort(candidates.begin(), candidates.end());

    DisjointSets sets(q);
    std::vector<Edge> edges;
    for (auto [deg, i, j] : candidates) {
        if (sets.unite(i, j))
            edges.emplace_back(i, j);
        if (edges.size() + 1 == q)
            break;
    }
    if (edges.size() + 1 != q)
        throw std::logic_error("nested spanning forests did not reach a spanning tree");
    return LabeledComplex::graph(std::move(labels), edges);
}

bool satisfies_degree_filtration(const LabeledComplex& tree)
{
    if (!tree.is_tree())
        return false;
    std::size_t q = tree.vertex_count();
    auto edges = tree.edges();
    std::set<unsigned> thresholds;
    for (std::size_t i = 0; i < q; ++i) {
        thresholds.insert(tree.label(i).degree());
        for (std::size_t j = i + 1; j < q; ++j)
            thresholds.insert(lcm(tree.label(i), tree.label(j)).degree());
    }
    for (unsigned level : thresholds) {
        DisjointSets sets(q);
        for (auto [a, b] : edges)
            if (lcm(tree.label(a), tree.label(b)).degree() <= level)
                sets.unite(a, b);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i + 1; j < q; ++j)
                if (lcm(tree.label(i), tree.label(j)).degree() <= level && sets.find(i) != sets.find(j))
                    return false;
    }
    return true;
}

std::optional<LabeledComplex> find_supporting_tree(const MonomialIdeal& ideal)
{
    std::size_t q = ideal.size();
    if (q > kMaxTreeSearchGenerators)
        throw std::domain_error("spanning-tree search is limited to 8 generators");
    std::vector<Monomial> labels(ideal.generators().begin(), ideal.generators().end());
    if (q == 1)
        return LabeledComplex::graph(std::move(labels), {});

    std::vector<std::size_t> code(q - 2, 0);
    while (true) {
        // Prüfer decoding
        std::vector<std::size_t> degree(q, 1);
        for (auto c : code)
            ++degree[c];
        std::vector<Edge> edges;
        for (auto c : code) {
            std::size_t leaf = 0;
            while (degree[leaf] != 1)
                ++leaf;
            edges.push_back(ordered(leaf, c));
            --degree[leaf];
            --degree[c];
        }
        std::size_t a = q, b = q;
        for (std::size_t v = 0; v < q; ++v) {
            if (degree[v] == 1)
                (a == q ? a : b) = v;
        }
        edges.push_back(ordered(a, b));

        auto tree = LabeledComplex::graph(labels, edges);
        if (tree_supports_minimal_resolution(tree))
            return tree;

        std::size_t k = 0;
        while (k < code.size() && ++code[k] == q)
            code[k++] = 0;
        if (k == code.size())
            break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Frame frame(const FreeComplex& complex)
{
    Frame f;
    f.dims = complex.ranks();
    for (std::size_t i = 1; i <= complex.length(); ++i) {
        IntMatrix m(f.dims[i - 1], f.dims[i]);
        for (const auto& e : complex.differential(i))
            m.at(e.row, e.col) += e.sign;
        f.differentials.push_back(std::move(m));
    }
    return f;
}

std::optional<Graph> frame_to_graph(const Frame& f)
{
    if (f.dims.size() < 2 || f.dims.size() > 3)
        throw std::invalid_argument("frame must have length 1 or 2");
    Graph g{f.dims[1], {}};
    if (f.dims.size() == 2)
        return g;
    const IntMatrix& d2 = f.differentials[1];
    for (std::size_t c = 0; c < d2.cols; ++c) {
        std::optional<std::size_t> plus, minus;
        for (std::size_t r = 0; r < d2.rows; ++r) {
            long long v = d2.at(r, c);
            if (v == 0)
                continue;
            if (v == 1 && !plus)
                plus = r;
            else if (v == -1 && !minus)
                minus = r;
            else
                return std::nullopt;
        }
        if (!plus || !minus)
            return std::nullopt;
        g.edges.emplace_back(*plus, *minus);
    }
    return g;
}

}  // namespace monores
