#include "monores/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "monores/duality.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monores {

constexpr std::size_t kMaxCensusVertices = 5;

bool EquivalenceReport::consistent() const
{
    bool a = pd_at_most_one();
    if (quasi_forest() != a || tree_supports_minimal != a)
        return false;
    return !brute_force || *brute_force == a;
}

EquivalenceReport check_equivalence(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree())
        throw std::invalid_argument("equivalence check needs a squarefree ideal; polarize first");
    auto table = betti(ideal);
    EquivalenceReport r{ideal, dual_facets(ideal), table, table.projective_dimension() - 1, {}, false, {}, false, {}};
    r.leaf_order = leaf_order(r.dual, LeafOrderMode::Exhaustive);
    r.connected = is_connected(r.dual);
    if (r.leaf_order) {
        r.tree = build_tree(r.dual, r.leaf_order);
        r.tree_supports_minimal = supports_resolution(*r.tree) && is_minimal_support(*r.tree);
    }
    if (ideal.size() <= 8)
        r.brute_force = find_supporting_tree(ideal).has_value();
    return r;
}

// ---------------------------------------------------------------------------

namespace {

VertexMask permute(VertexMask m, const std::vector<std::size_t>& perm)
{
    VertexMask out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (m >> i & 1)
            out |= VertexMask{1} << perm[i];
    return out;
}

void antichains(const std::vector<VertexMask>& subsets, std::size_t pos, VertexMask full,
                std::vector<VertexMask>& chosen, std::vector<std::vector<VertexMask>>& out)
{
    if (pos == subsets.size()) {
        VertexMask cover = 0;
        for (auto c : chosen)
            cover |= c;
        if (cover == full)
            out.push_back(chosen);
        return;
    }
    VertexMask s = subsets[pos];
    // earlier subsets are at least as large, so only containment in them matters
    bool free = std::none_of(chosen.begin(), chosen.end(), [s](VertexMask c) { return (s & c) == s; });
    if (free) {
        chosen.push_back(s);
        antichains(subsets, pos + 1, full, chosen, out);
        chosen.pop_back();
    }
    antichains(subsets, pos + 1, full, chosen, out);
}

}  // namespace

std::vector<VertexMask> canonical_form(const SimplicialComplex& d)
{
    std::size_t n = d.universe()->size();
    if (n > 8)
        throw std::domain_error("canonical form is limited to 8 vertices");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<VertexMask>> best;
    do {
        std::vector<VertexMask> image;
        for (auto f : d.facets())
            image.push_back(permute(f, perm));
        std::sort(image.begin(), image.end());
        if (!best || image < *best)
            best = std::move(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

std::vector<SimplicialComplex> enumerate_complexes(std::size_t n, bool up_to_isomorphism)
{
    if (n == 0 || n > kMaxCensusVertices)
        throw std::domain_error("census enumeration supports 1 to 5 vertices");
    VertexMask full = full_mask(n);
    std::vector<VertexMask> subsets;
    for (VertexMask s = 1; s <= full; ++s)
        subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(), [](VertexMask a, VertexMask b) {
        if (std::popcount(a) != std::popcount(b))
            return std::popcount(a) > std::popcount(b);
        return lex_less(a, b);
    });

    std::vector<std::vector<VertexMask>> found;
    std::vector<VertexMask> chosen;
    antichains(subsets, 0, full, chosen, found);

    auto vars = VariableSet::indexed("x", n);
    std::vector<SimplicialComplex> out;
    if (!up_to_isomorphism) {
        for (auto& f : found)
            out.emplace_back(vars, std::move(f));
        return out;
    }
    std::set<std::vector<VertexMask>> seen;
    for (auto& f : found) {
        SimplicialComplex d(vars, std::move(f));
        auto canon = canonical_form(d);
        if (seen.insert(canon).second) {
            std::sort(canon.begin(), canon.end(), [](VertexMask a, VertexMask b) {
                if (std::popcount(a) != std::popcount(b))
                    return std::popcount(a) > std::popcount(b);
                return lex_less(a, b);
            });
            out.emplace_back(vars, std::move(canon));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t b = 1;
    for (std::size_t i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

std::vector<Edge> sorted_edges(std::vector<Edge> e)
{
    for (auto& [a, b] : e)
        if (a > b)
            std::swap(a, b);
    std::sort(e.begin(), e.end());
    return e;
}

void check_tree(const LabeledComplex& tree, std::size_t q, std::vector<std::string>& failures)
{
    bool supports = supports_resolution(tree);
    if (!supports)
        failures.push_back("built tree does not support a resolution");
    if (!is_minimal_support(tree))
        failures.push_back("built tree is not minimal");
    if (supports_resolution_pairwise(tree) && !supports)
        failures.push_back("pairwise lcm connectivity without full-lattice connectivity");
    if (!satisfies_degree_filtration(tree))
        failures.push_back("degree filtration is not a nested spanning forest");
    if (!tree.is_tree() || tree.edges().size() + 1 != q)
        failures.push_back("built graph is not a spanning tree");

    auto f = homogenize(tree);
    if (!f.composes_to_zero())
        failures.push_back("homogenized complex has d∘d ≠ 0");
    if (!f.has_nonunit_entries())
        failures.push_back("homogenized complex has a unit entry");
    auto fr = frame(f);
    if (!is_exact_frame(fr))
        failures.push_back("frame of the tree resolution is not exact");
    auto g = frame_to_graph(fr);
    if (!g || !g->is_tree() || sorted_edges(g->edges) != sorted_edges(tree.edges()))
        failures.push_back("frame does not read back as the tree");
}

}  // namespace

InstanceResult check_instance(const SimplicialComplex& d, bool equivalence)
{
    InstanceResult r{d, false, false, false, false, false, {}, 0, {}};
    auto fail = [&](const std::string& check, const std::string& detail) {
        r.discrepancies.push_back({check, d, detail});
    };

    try {
        r.full_simplex = d.facet_count() == 1 && d.facet(0) == d.universe_mask();
        r.connected = is_connected(d);

        // leaf orders
        auto exhaustive = leaf_order(d, LeafOrderMode::Exhaustive);
        auto greedy = leaf_order(d, LeafOrderMode::Greedy);
        r.quasi_forest = exhaustive.has_value();
        if (exhaustive && !is_leaf_order(d, *exhaustive))
            fail("leaf-order", "exhaustive search returned an invalid order");
        if (greedy.has_value() != r.quasi_forest)
            fail("greedy", "greedy peeling disagrees with exhaustive search");
        if (greedy && !is_leaf_order(d, *greedy))
            fail("greedy", "greedy peeling returned an invalid order");
        if (is_quasi_forest_by_induced(d) != r.quasi_forest)
            fail("induced-leaves", "leaf order existence differs from induced-subcomplex leaves");
        r.simplicial_forest = is_simplicial_forest(d);
        if (r.simplicial_forest && !r.quasi_forest)
            fail("forest", "simplicial forest without a leaf order");
        for (std::size_t i = 0; i < d.facet_count(); ++i)
            if (is_leaf(d, i) && free_vertices(d, i) == 0)
                fail("free-vertex", "leaf " + d.facet_to_string(d.facet(i)) + " has no free vertex");

        // homology
        auto h = reduced_homology_dims(std::optional<SimplicialComplex>(d));
        long long euler_f = 1;
        auto fv = f_vector(d);
        for (std::size_t k = 0; k < fv.size(); ++k)
            euler_f += (k % 2 == 0 ? -1 : 1) * static_cast<long long>(fv[k]);
        long long euler_h = 0;
        for (std::size_t k = 0; k < h.dims.size(); ++k)
            euler_h += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h.dims[k]);
        if (euler_f != euler_h)
            fail("euler", "f-vector and homology Euler characteristics differ");
        if (r.quasi_forest && r.connected && !h.is_acyclic())
            fail("acyclic", "connected quasi-forest has nonzero reduced homology");

        // duality
        auto nd = sr_ideal(d);
        if (nd.has_value() == r.full_simplex)
            fail("sr", "N(Δ) is zero exactly when Δ is not the full simplex");
        if (nd) {
            auto back = sr_complex(*nd);
            if (!(back == d))
                fail("sr", "N(N(Δ)) = " + back.to_string());
            auto again = sr_ideal(back);
            if (!again || !same_ideal(*again, *nd))
                fail("sr", "N(N(I)) differs from I");
        }
        auto ad = alexander_dual(d);
        if (ad.has_value() == r.full_simplex)
            fail("alexander", "dual is void exactly when Δ is not the full simplex");
        if (ad) {
            auto add = alexander_dual(*ad);
            if (!add || !(*add == d))
                fail("alexander", "(Δ^∨)^∨ differs from Δ");
        }
        if (r.full_simplex || d.is_empty())
            return r;

        auto ideal = dual_generators(d);
        auto via_dual = ad ? sr_ideal(*ad) : std::nullopt;
        if (!via_dual || !same_ideal(*via_dual, ideal))
            fail("dual-generators", "fast path differs from N(Δ^∨)");
        auto facets_back = dual_facets(ideal);
        if (!std::equal(facets_back.facets().begin(), facets_back.facets().end(), d.facets().begin(),
                        d.facets().end()))
            fail("dual-generators", "dual_facets(dual_generators(Δ)) differs from Δ");
        if (!(dual_generators(facets_back) == ideal))
            fail("dual-generators", "dual_generators(dual_facets(I)) differs from I");

        if (!equivalence)
            return r;
        r.equivalence_checked = true;

        auto eq = check_equivalence(ideal);
        r.pd = eq.pd;
        if (!eq.consistent())
            fail("equivalence",
                 "pd(I)=" + std::to_string(eq.pd) + ", quasi-forest=" + (eq.quasi_forest() ? "yes" : "no") +
                     ", built tree supports minimal resolution=" + (eq.tree_supports_minimal ? "yes" : "no") +
                     ", brute-force tree=" +
                     (eq.brute_force ? (*eq.brute_force ? "yes" : "no") : std::string("skipped")));
        if (eq.quasi_forest() != r.quasi_forest)
            fail("equivalence", "dual of the generators is not Δ");
        if (!is_exact_frame(frame(taylor(ideal))))
            fail("taylor", "Taylor frame is not exact");
        auto totals = eq.betti.totals();
        for (std::size_t i = 0; i < totals.size(); ++i)
            if (totals[i] > binomial(ideal.size(), i))
                fail("taylor", "Betti number exceeds the Taylor rank");
        if (!eq.pd_at_most_one())
            return r;

        std::size_t q = ideal.size();
        std::vector<std::size_t> expected{1, q};
        if (q > 1)
            expected.push_back(q - 1);
        if (totals != expected)
            fail("betti", "Betti totals differ from the tree f-vector");

        std::vector<std::string> failures;
        for (const auto& t : enumerate_trees(d)) {
            check_tree(t, q, failures);
            ++r.trees_checked;
        }
        auto fl = floystad_tree(ideal);
        if (!supports_resolution(fl) || !is_minimal_support(fl))
            failures.push_back("Floystad tree does not support a minimal resolution");
        std::sort(failures.begin(), failures.end());
        failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
        for (const auto& f : failures)
            fail("trees", f);
    } catch (const std::exception& e) {
        fail("exception", e.what());
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

struct Task {
    SimplicialComplex complex;
    bool equivalence;
};

std::vector<Task> census_tasks(const CensusOptions& o, std::vector<std::size_t>& by_vertices)
{
    if (o.max_vertices == 0 || o.max_vertices > kMaxCensusVertices)
        throw std::domain_error("census supports 1 to 5 vertices");
    std::vector<Task> tasks;
    by_vertices.assign(o.max_vertices + 1, 0);
    for (std::size_t n = 1; n <= o.max_vertices; ++n) {
        for (auto& d : enumerate_complexes(n, o.up_to_isomorphism)) {
            tasks.push_back({std::move(d), n <= o.equivalence_max_vertices});
            ++by_vertices[n];
        }
    }
    return tasks;
}

CensusReport reduce(std::vector<InstanceResult> results, std::vector<std::size_t> by_vertices)
{
    CensusReport rep;
    rep.complexes_by_vertices = std::move(by_vertices);
    for (auto& r : results) {
        ++rep.complexes;
        rep.quasi_forests += r.quasi_forest;
        rep.quasi_trees += r.quasi_forest && r.connected;
        rep.simplicial_forests += r.simplicial_forest;
        rep.equivalence_instances += r.equivalence_checked;
        rep.pd_at_most_one += r.pd && *r.pd <= 1;
        rep.trees_checked += r.trees_checked;
        if (r.quasi_forest && !r.simplicial_forest && !rep.quasi_forest_not_forest)
            rep.quasi_forest_not_forest = r.complex;
        for (auto& d : r.discrepancies)
            rep.discrepancies.push_back(d);
    }
    rep.instances = std::move(results);
    return rep;
}

}  // namespace

CensusReport run_census(const CensusOptions& options)
{
    std::vector<std::size_t> by_vertices;
    auto tasks = census_tasks(options, by_vertices);
    std::vector<std::optional<InstanceResult>> slots(tasks.size());
    const auto n = static_cast<long>(tasks.size());
#ifdef _OPENMP
    int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
#else
    int threads = 1;
#endif
    (void)threads;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < n; ++i)
        slots[i] = check_instance(tasks[i].complex, tasks[i].equivalence);

    std::vector<InstanceResult> results;
    results.reserve(slots.size());
    for (auto& s : slots)
        results.push_back(std::move(*s));
    return reduce(std::move(results), std::move(by_vertices));
}

CensusReport run_census_serial(const CensusOptions& options)
{
    std::vector<std::size_t> by_vertices;
    auto tasks = census_tasks(options, by_vertices);
    std::vector<InstanceResult> results;
    results.reserve(tasks.size());
    for (const auto& t : tasks)
        results.push_back(check_instance(t.complex, t.equivalence));
    return reduce(std::move(results), std::move(by_vertices));
}

// ---------------------------------------------------------------------------

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_generators)
{
    if (max_vars == 0 || max_vars > kMaxVariables || max_generators == 0)
        throw std::invalid_argument("random ideal needs at least one variable and one generator");
    std::size_t n = draw(rng, 1, max_vars);
    auto vars = VariableSet::indexed("x", n);
    std::size_t q = draw(rng, 1, max_generators);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < q; ++i)
        gens.push_back(Monomial::from_mask(vars, draw(rng, 1, full_mask(n))));
    return minimalize(gens);
}

MonomialIdeal random_nonsquarefree_ideal(std::mt19937_64& rng, std::size_t max_vars, unsigned max_exponent,
                                         std::size_t max_generators)
{
    if (max_vars == 0 || max_vars > kMaxVariables || max_generators == 0 || max_exponent < 2)
        throw std::invalid_argument("random ideal needs variables, generators and exponents up to at least 2");
    for (;;) {
        std::size_t n = draw(rng, 1, max_vars);
        auto vars = VariableSet::indexed("x", n);
        std::size_t q = draw(rng, 1, max_generators);
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < q; ++i) {
            std::vector<unsigned> e(n);
            for (auto& x : e)
                x = static_cast<unsigned>(draw(rng, 0, max_exponent));
            Monomial m(vars, std::move(e));
            if (!m.is_one())
                gens.push_back(std::move(m));
        }
        if (gens.empty())
            continue;
        auto ideal = minimalize(gens);
        if (!ideal.is_squarefree())
            return ideal;
    }
}

}  // namespace monores
