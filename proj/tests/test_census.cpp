#include <doctest.h>

#include <numeric>
#include <set>

#include "monores/census.hpp"
#include "monores/duality.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace monores;

namespace {

/// Antichains of nonempty subsets of [n] whose union is [n], by brute force
/// over all families of subsets.
std::vector<std::vector<VertexMask>> covering_antichains(std::size_t n)
{
    std::size_t subsets = (std::size_t{1} << n) - 1;
    std::vector<std::vector<VertexMask>> out;
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets); ++family) {
        std::vector<VertexMask> members;
        for (std::size_t s = 0; s < subsets; ++s)
            if (family >> s & 1)
                members.push_back(s + 1);
        VertexMask all = 0;
        bool antichain = true;
        for (auto a : members) {
            all |= a;
            for (auto b : members)
                if (a != b && (a & b) == a)
                    antichain = false;
        }
        if (antichain && all == full_mask(n))
            out.push_back(members);
    }
    return out;
}

VertexMask permute(VertexMask m, const std::vector<std::size_t>& p)
{
    VertexMask out = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (m >> i & 1)
            out |= VertexMask{1} << p[i];
    return out;
}

/// Orbit of a facet list under all vertex permutations, as a set of sorted lists.
std::set<std::vector<VertexMask>> orbit(const std::vector<VertexMask>& facets, std::size_t n)
{
    std::set<std::vector<VertexMask>> out;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<VertexMask> img;
        for (auto f : facets)
            img.push_back(permute(f, p));
        std::sort(img.begin(), img.end());
        out.insert(img);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_CASE("complex counts match brute force and the known sequences")
{
    std::vector<std::size_t> labeled{0, 1, 2, 9, 114, 6894};
    std::vector<std::size_t> unlabeled{0, 1, 2, 5, 20, 180};
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(enumerate_complexes(n, false).size() == labeled[n]);
        CHECK(enumerate_complexes(n, true).size() == unlabeled[n]);
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        auto all = covering_antichains(n);
        CHECK(all.size() == labeled[n]);
        std::set<std::set<std::vector<VertexMask>>> orbits;
        for (const auto& a : all)
            orbits.insert(orbit(a, n));
        CHECK(orbits.size() == unlabeled[n]);
    }
    CHECK_THROWS_AS(enumerate_complexes(6), std::domain_error);
}

TEST_CASE("canonical form is a relabeling invariant")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        std::set<std::vector<VertexMask>> reps;
        for (const auto& d : enumerate_complexes(n, true))
            reps.insert(canonical_form(d));
        CHECK(reps.size() == enumerate_complexes(n, true).size());
        for (const auto& d : enumerate_complexes(n, false)) {
            auto c = canonical_form(d);
            CHECK(reps.count(c) == 1);
            std::vector<VertexMask> fs(d.facets().begin(), d.facets().end());
            CHECK(orbit(fs, n).count(c) == 1);
        }
    }
    auto example = dual_facets(fixtures::example_ideal());
    std::vector<VertexMask> shifted;
    for (auto f : example.facets())
        shifted.push_back(((f << 1) | (f >> 5)) & full_mask(6));
    std::reverse(shifted.begin(), shifted.end());
    CHECK(canonical_form(SimplicialComplex(example.universe(), shifted)) == canonical_form(example));
}

TEST_CASE("equivalence report on the named examples")
{
    auto example = check_equivalence(fixtures::example_ideal());
    CHECK(example.pd == 1);
    CHECK(example.quasi_forest());
    CHECK(example.connected);
    REQUIRE(example.tree.has_value());
    CHECK(example.tree_supports_minimal);
    CHECK(example.brute_force == std::optional<bool>(true));
    CHECK(example.consistent());

    auto cycle = check_equivalence(fixtures::cycle4_ideal());
    CHECK(cycle.pd == 2);
    CHECK_FALSE(cycle.quasi_forest());
    CHECK_FALSE(cycle.tree.has_value());
    CHECK(cycle.brute_force == std::optional<bool>(false));
    CHECK(cycle.consistent());

    CHECK_THROWS_AS(check_equivalence(parse_ideal("vars x\nx^2")), std::invalid_argument);
}

TEST_CASE("census: invariants hold on every complex up to four vertices")
{
    CensusOptions opt;
    opt.max_vertices = 4;
    opt.equivalence_max_vertices = 4;
    auto report = run_census(opt);
    CHECK(report.complexes == 28);
    CHECK(report.discrepancies.empty());
    CHECK(report.equivalence_instances == 24);
    CHECK(report.quasi_forests == report.simplicial_forests);
    CHECK_FALSE(report.quasi_forest_not_forest.has_value());
    CHECK(report.pd_at_most_one > 0);
    CHECK(report.pd_at_most_one < report.equivalence_instances);

    // the 4-cycle appears with pd(I) = 2
    auto square = dual_facets(fixtures::cycle4_ideal());
    bool seen = false;
    for (const auto& r : report.instances) {
        if (canonical_form(r.complex) != canonical_form(square))
            continue;
        seen = true;
        CHECK(r.pd == std::optional<std::size_t>(2));
        CHECK_FALSE(r.quasi_forest);
    }
    CHECK(seen);
}

TEST_CASE("census: parallel and serial runs agree")
{
    CensusOptions opt;
    opt.max_vertices = 4;
    opt.equivalence_max_vertices = 3;
    opt.up_to_isomorphism = false;
    opt.workers = 3;
    auto par = run_census(opt);
    auto ser = run_census_serial(opt);
    CHECK(par.complexes == ser.complexes);
    CHECK(par.complexes == 1 + 2 + 9 + 114);
    CHECK(par.quasi_forests == ser.quasi_forests);
    CHECK(par.quasi_trees == ser.quasi_trees);
    CHECK(par.trees_checked == ser.trees_checked);
    CHECK(par.pd_at_most_one == ser.pd_at_most_one);
    REQUIRE(par.instances.size() == ser.instances.size());
    for (std::size_t i = 0; i < par.instances.size(); ++i) {
        CHECK(par.instances[i].complex == ser.instances[i].complex);
        CHECK(par.instances[i].quasi_forest == ser.instances[i].quasi_forest);
        CHECK(par.instances[i].pd == ser.instances[i].pd);
    }
    CHECK(par.discrepancies.empty());
}

TEST_CASE("a quasi-tree outside the census range passes every check")
{
    auto d = fixtures::quasi_tree_not_forest();
    auto r = check_instance(d, true);
    CHECK(r.quasi_forest);
    CHECK_FALSE(r.simplicial_forest);
    CHECK(r.pd == std::optional<std::size_t>(1));
    CHECK(r.trees_checked > 0);
    CHECK(r.discrepancies.empty());

    auto p = check_instance(dual_facets(fixtures::example_ideal()), true);
    CHECK(p.discrepancies.empty());
    CHECK_FALSE(p.simplicial_forest);
}

TEST_CASE("random ideal samplers")
{
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 100; ++iter) {
        auto s = random_squarefree_ideal(rng, 6, 5);
        CHECK(s.is_squarefree());
        CHECK(s.size() <= 5);
        CHECK(s.vars()->size() <= 6);
        auto n = random_nonsquarefree_ideal(rng, 3, 2, 4);
        CHECK_FALSE(n.is_squarefree());
        CHECK(n.size() <= 4);
        for (const auto& g : n.generators())
            for (auto e : g.exponents())
                CHECK(e <= 2);
    }
    CHECK_THROWS_AS(random_nonsquarefree_ideal(rng, 3, 1, 4), std::invalid_argument);

    std::mt19937_64 a(5), b(5);
    CHECK(random_squarefree_ideal(a, 5, 4) == random_squarefree_ideal(b, 5, 4));
}
