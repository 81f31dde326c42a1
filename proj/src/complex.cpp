#include "monores/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "internal.hpp"

namespace monores {

namespace {

constexpr std::size_t kMaxEnumeratedVertices = 20;
constexpr std::size_t kMaxEnumeratedFacets = 20;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

}  // namespace

bool lex_less(VertexMask a, VertexMask b)
{
    while (a && b) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb)
            return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

namespace detail {

std::vector<VertexMask> maximal_sets(std::span<const VertexMask> sets)
{
    std::vector<VertexMask> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        VertexMask s = sets[i];
        if (s == 0)
            continue;
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
            if (i == j || (s & ~sets[j]))
                continue;
            dominated = sets[j] != s || j < i;
        }
        if (!dominated)
            out.push_back(s);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(VarsPtr universe, std::vector<VertexMask> facets)
    : universe_(std::move(universe)), facets_(std::move(facets))
{
    if (!universe_)
        throw std::invalid_argument("complex needs a vertex universe");
    VertexMask all = universe_mask();
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (facets_[i] == 0)
            throw std::invalid_argument("facets must be nonempty");
        if (facets_[i] & ~all)
            throw std::invalid_argument("facet uses a vertex outside the universe");
        for (std::size_t j = 0; j < i; ++j) {
            if ((facets_[i] & ~facets_[j]) == 0 || (facets_[j] & ~facets_[i]) == 0)
                throw std::invalid_argument("facets " + facet_to_string(facets_[j]) + " and " +
                                            facet_to_string(facets_[i]) +
                                            " are not an antichain");
        }
    }
}

SimplicialComplex SimplicialComplex::from_names(VarsPtr universe,
                                                const std::vector<std::vector<std::string>>& facets)
{
    std::vector<VertexMask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        VertexMask m = universe->mask_of(f);
        if (std::popcount(m) != static_cast<int>(f.size()))
            throw std::invalid_argument("facet lists a vertex twice");
        masks.push_back(m);
    }
    return SimplicialComplex(std::move(universe), std::move(masks));
}

VertexMask SimplicialComplex::vertex_mask() const
{
    return std::accumulate(facets_.begin(), facets_.end(), VertexMask{0},
                           [](VertexMask a, VertexMask b) { return a | b; });
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (auto f : facets_)
        d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::contains_face(VertexMask face) const
{
    if (face == 0)
        return true;
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](VertexMask f) { return (face & ~f) == 0; });
}

std::optional<std::size_t> SimplicialComplex::facet_index(VertexMask facet) const
{
    auto it = std::find(facets_.begin(), facets_.end(), facet);
    if (it == facets_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - facets_.begin());
}

std::vector<VertexMask> SimplicialComplex::canonical_facets() const
{
    std::vector<VertexMask> c = facets_;
    std::sort(c.begin(), c.end(), lex_less);
    return c;
}

std::string SimplicialComplex::facet_to_string(VertexMask facet) const
{
    std::string out = "{";
    bool first = true;
    for (const auto& n : universe_->names_in(facet)) {
        if (!first)
            out += ',';
        out += n;
        first = false;
    }
    return out + "}";
}

std::string SimplicialComplex::to_string() const
{
    std::string out = "<";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i)
            out += ',';
        out += facet_to_string(facets_[i]);
    }
    return out + ">";
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return same_vars(a.universe_, b.universe_) && a.canonical_facets() == b.canonical_facets();
}

// ---------------------------------------------------------------------------

std::vector<VertexMask> faces(const SimplicialComplex& d)
{
    std::unordered_set<VertexMask> seen;
    for (auto f : d.facets()) {
        if (static_cast<std::size_t>(std::popcount(f)) > kMaxEnumeratedVertices)
            throw std::domain_error("facet too large to enumerate its faces");
        for (VertexMask s = f; s; s = (s - 1) & f)
            seen.insert(s);
    }
    std::vector<VertexMask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : lex_less(a, b);
    });
    return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& d)
{
    std::vector<std::size_t> f(static_cast<std::size_t>(d.dimension() + 1), 0);
    for (auto face : faces(d))
        ++f[std::popcount(face) - 1];
    return f;
}

SimplicialComplex induced(const SimplicialComplex& d, VertexMask w)
{
    if (w == 0)
        throw std::invalid_argument("induced subcomplex needs a nonempty vertex subset");
    if (w & ~d.universe_mask())
        throw std::invalid_argument("vertex subset is not contained in the universe");
    std::vector<VertexMask> cut;
    cut.reserve(d.facet_count());
    for (auto f : d.facets())
        cut.push_back(f & w);
    auto rvars = restrict_vars(d.universe(), w);
    std::vector<VertexMask> facets;
    for (auto f : detail::maximal_sets(cut))
        facets.push_back(compress_mask(f, w));
    return SimplicialComplex(std::move(rvars), std::move(facets));
}

SimplicialComplex induced(const SimplicialComplex& d, std::span<const std::string> names)
{
    return induced(d, d.universe()->mask_of(names));
}

SimplicialComplex subcollection(const SimplicialComplex& d, std::span<const std::size_t> facet_indices)
{
    if (facet_indices.empty())
        throw std::invalid_argument("subcollection needs at least one facet");
    std::vector<VertexMask> facets;
    std::uint64_t used = 0;
    for (auto i : facet_indices) {
        if (i >= d.facet_count())
            throw std::out_of_range("facet index " + std::to_string(i) + " out of range");
        if (used & bit(i))
            continue;
        used |= bit(i);
        facets.push_back(d.facet(i));
    }
    return SimplicialComplex(d.universe(), std::move(facets));
}

// ---------------------------------------------------------------------------

namespace {

bool is_joint_within(std::span<const VertexMask> facets, std::uint64_t members, std::size_t f,
                     std::size_t g)
{
    VertexMask joint = facets[g];
    for (std::uint64_t m = members; m; m &= m - 1) {
        auto h = static_cast<std::size_t>(std::countr_zero(m));
        if (h == f)
            continue;
        if ((facets[f] & facets[h]) & ~joint)
            return false;
    }
    return true;
}

void require_facet_index(const SimplicialComplex& d, std::size_t facet)
{
    if (facet >= d.facet_count())
        throw std::invalid_argument("facet index " + std::to_string(facet) +
                                    " is not a facet of the complex");
}

std::uint64_t all_members(std::size_t q)
{
    if (q > 64)
        throw std::domain_error("at most 64 facets are supported");
    return q == 64 ? ~std::uint64_t{0} : bit(q) - 1;
}

}  // namespace

bool is_leaf_within(std::span<const VertexMask> facets, std::uint64_t members, std::size_t f)
{
    if (members == bit(f))
        return true;
    for (std::uint64_t m = members; m; m &= m - 1) {
        auto g = static_cast<std::size_t>(std::countr_zero(m));
        if (g != f && is_joint_within(facets, members, f, g))
            return true;
    }
    return false;
}

std::vector<std::size_t> joints_within(std::span<const VertexMask> facets, std::uint64_t members,
                                       std::size_t f)
{
    std::vector<std::size_t> out;
    for (std::uint64_t m = members; m; m &= m - 1) {
        auto g = static_cast<std::size_t>(std::countr_zero(m));
        if (g != f && is_joint_within(facets, members, f, g))
            out.push_back(g);
    }
    return out;
}

std::vector<std::size_t> joints(const SimplicialComplex& d, std::size_t facet)
{
    require_facet_index(d, facet);
    return joints_within(d.facets(), all_members(d.facet_count()), facet);
}

bool is_leaf(const SimplicialComplex& d, std::size_t facet)
{
    require_facet_index(d, facet);
    return is_leaf_within(d.facets(), all_members(d.facet_count()), facet);
}

VertexMask free_vertices(const SimplicialComplex& d, std::size_t facet)
{
    require_facet_index(d, facet);
    VertexMask others = 0;
    for (std::size_t i = 0; i < d.facet_count(); ++i)
        if (i != facet)
            others |= d.facet(i);
    return d.facet(facet) & ~others;
}

namespace {

// Forward search: grow a prefix set whose members admit a leaf order, always
// trying the smallest facet index first. Dead prefix sets are memoized.
bool extend_leaf_order(std::span<const VertexMask> facets, std::uint64_t all, std::uint64_t prefix,
                       std::vector<std::size_t>& order, std::unordered_set<std::uint64_t>& dead)
{
    if (prefix == all)
        return true;
    if (dead.count(prefix))
        return false;
    for (std::uint64_t rest = all & ~prefix; rest; rest &= rest - 1) {
        auto f = static_cast<std::size_t>(std::countr_zero(rest));
        if (!is_leaf_within(facets, prefix | bit(f), f))
            continue;
        order.push_back(f);
        if (extend_leaf_order(facets, all, prefix | bit(f), order, dead))
            return true;
        order.pop_back();
    }
    dead.insert(prefix);
    return false;
}

bool collect_leaf_orders(std::span<const VertexMask> facets, std::uint64_t all, std::uint64_t prefix,
                         std::vector<std::size_t>& order, std::unordered_set<std::uint64_t>& dead,
                         std::vector<std::vector<std::size_t>>& out)
{
    if (prefix == all) {
        out.push_back(order);
        return true;
    }
    if (dead.count(prefix))
        return false;
    bool any = false;
    for (std::uint64_t rest = all & ~prefix; rest; rest &= rest - 1) {
        auto f = static_cast<std::size_t>(std::countr_zero(rest));
        if (!is_leaf_within(facets, prefix | bit(f), f))
            continue;
        order.push_back(f);
        any |= collect_leaf_orders(facets, all, prefix | bit(f), order, dead, out);
        order.pop_back();
    }
    if (!any)
        dead.insert(prefix);
    return any;
}

}  // namespace

std::optional<std::vector<std::size_t>> leaf_order(const SimplicialComplex& d, LeafOrderMode mode)
{
    std::size_t q = d.facet_count();
    std::uint64_t all = all_members(q);
    std::vector<std::size_t> order;
    if (q == 0)
        return order;

    if (mode == LeafOrderMode::Exhaustive) {
        std::unordered_set<std::uint64_t> dead;
        if (extend_leaf_order(d.facets(), all, 0, order, dead))
            return order;
        return std::nullopt;
    }

    std::uint64_t current = all;
    while (std::popcount(current) > 1) {
        bool peeled = false;
        for (std::uint64_t m = current; m; m &= m - 1) {
            auto f = static_cast<std::size_t>(std::countr_zero(m));
            if (is_leaf_within(d.facets(), current, f)) {
                order.push_back(f);
                current &= ~bit(f);
                peeled = true;
                break;
            }
        }
        if (!peeled)
            return std::nullopt;
    }
    order.push_back(static_cast<std::size_t>(std::countr_zero(current)));
    std::reverse(order.begin(), order.end());
    return order;
}

bool is_leaf_order(const SimplicialComplex& d, std::span<const std::size_t> order)
{
    if (order.size() != d.facet_count())
        return false;
    std::uint64_t prefix = 0;
    for (auto f : order) {
        if (f >= d.facet_count() || (prefix & bit(f)))
            return false;
        prefix |= bit(f);
        if (!is_leaf_within(d.facets(), prefix, f))
            return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> all_leaf_orders(const SimplicialComplex& d)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> order;
    std::unordered_set<std::uint64_t> dead;
    if (d.facet_count() == 0)
        return {{}};
    collect_leaf_orders(d.facets(), all_members(d.facet_count()), 0, order, dead, out);
    return out;
}

bool is_quasi_forest(const SimplicialComplex& d)
{
    return leaf_order(d, LeafOrderMode::Exhaustive).has_value();
}

bool is_quasi_forest_by_induced(const SimplicialComplex& d)
{
    VertexMask v = d.vertex_mask();
    if (static_cast<std::size_t>(std::popcount(v)) > kMaxEnumeratedVertices)
        throw std::domain_error("too many vertices for induced-subcomplex enumeration");
    std::vector<VertexMask> cut(d.facet_count());
    for (VertexMask w = v; w; w = (w - 1) & v) {
        for (std::size_t i = 0; i < d.facet_count(); ++i)
            cut[i] = d.facet(i) & w;
        auto facets = detail::maximal_sets(cut);
        if (facets.empty())
            continue;
        std::uint64_t all = all_members(facets.size());
        bool has_leaf = false;
        for (std::size_t f = 0; f < facets.size() && !has_leaf; ++f)
            has_leaf = is_leaf_within(facets, all, f);
        if (!has_leaf)
            return false;
    }
    return true;
}

bool is_simplicial_forest(const SimplicialComplex& d)
{
    std::size_t q = d.facet_count();
    if (q > kMaxEnumeratedFacets)
        throw std::domain_error("too many facets for subcollection enumeration");
    std::uint64_t all = all_members(q);
    for (std::uint64_t s = all; s; s = (s - 1) & all) {
        bool has_leaf = false;
        for (std::uint64_t m = s; m && !has_leaf; m &= m - 1)
            has_leaf = is_leaf_within(d.facets(), s, static_cast<std::size_t>(std::countr_zero(m)));
        if (!has_leaf)
            return false;
    }
    return true;
}

std::vector<VertexMask> connected_components(const SimplicialComplex& d)
{
    std::vector<VertexMask> comps;
    for (auto f : d.facets()) {
        VertexMask merged = f;
        std::vector<VertexMask> keep;
        for (auto c : comps) {
            if (c & merged)
                merged |= c;
            else
                keep.push_back(c);
        }
        keep.push_back(merged);
        comps = std::move(keep);
    }
    std::sort(comps.begin(), comps.end(), lex_less);
    return comps;
}

bool is_connected(const SimplicialComplex& d)
{
    return connected_components(d).size() <= 1;
}

}  // namespace monores
