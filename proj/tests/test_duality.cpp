#include <doctest.h>

#include "monores/duality.hpp"
#include "monores/io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace monores;

namespace {

oracle::Faces faces_of_ideal(const MonomialIdeal& i)
{
    oracle::Faces out;
    for (const auto& g : i.generators())
        out.push_back(oracle::to_face(g.support()));
    std::sort(out.begin(), out.end());
    return out;
}

oracle::Faces sorted(oracle::Faces fs)
{
    std::sort(fs.begin(), fs.end());
    return fs;
}

}  // namespace

TEST_CASE("Stanley-Reisner ideal")
{
    auto two = fixtures::complex({"x1", "x2"}, {{"x1"}, {"x2"}});
    auto i = sr_ideal(two);
    REQUIRE(i.has_value());
    CHECK(i->to_string() == "(x1*x2)");

    auto t = sr_ideal(fixtures::hollow_triangle());
    REQUIRE(t.has_value());
    CHECK(t->to_string() == "(a*b*c)");

    CHECK_FALSE(sr_ideal(fixtures::complex({"a", "b"}, {{"a", "b"}})).has_value());

    // {∅}: every vertex is a non-face
    SimplicialComplex empty(VariableSet::make({"a", "b"}), {});
    auto e = sr_ideal(empty);
    REQUIRE(e.has_value());
    CHECK(e->to_string() == "(a, b)");
}

TEST_CASE("Stanley-Reisner complex")
{
    auto one = sr_complex(parse_ideal("vars x1 x2\nx1*x2"));
    CHECK(one.to_string() == "<{x1},{x2}>");
    auto both = sr_complex(parse_ideal("vars x1 x2\nx1, x2"));
    CHECK(both.is_empty());
    CHECK_THROWS_AS(sr_complex(parse_ideal("vars x1 x2\nx1^2")), std::invalid_argument);
    // ghost vertex x1 stays in the universe
    auto ghost = sr_complex(parse_ideal("vars x1 x2 x3\nx1, x2*x3"));
    CHECK(ghost.to_string() == "<{x2},{x3}>");
    CHECK(ghost.universe()->size() == 3);
}

TEST_CASE("Alexander dual")
{
    auto two = fixtures::complex({"x1", "x2"}, {{"x1"}, {"x2"}});
    auto d = alexander_dual(two);
    REQUIRE(d.has_value());
    // the only non-face is {x1,x2}
    CHECK(d->is_empty());
    auto single = alexander_dual(fixtures::complex({"x1", "x2"}, {{"x1"}}));
    REQUIRE(single.has_value());
    CHECK(single->to_string() == "<{x1}>");

    // only {a,b,c} is a non-face, and its complement is ∅
    auto t = alexander_dual(fixtures::hollow_triangle());
    REQUIRE(t.has_value());
    CHECK(t->is_empty());
    auto back = alexander_dual(*t);
    REQUIRE(back.has_value());
    CHECK(*back == fixtures::hollow_triangle());

    CHECK_FALSE(alexander_dual(fixtures::complex({"a", "b"}, {{"a", "b"}})).has_value());
}

TEST_CASE("dual facets and generators on the worked examples")
{
    auto example = fixtures::example_ideal();
    auto d = dual_facets(example);
    CHECK(d.to_string() == "<{x2,x4,x5},{x2,x3,x5},{x3,x5,x6},{x1,x2,x3}>");
    CHECK(dual_generators(d) == example);

    auto star = parse_ideal("vars x1 x2 x3 x4 x5\nx1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4");
    auto s = dual_facets(star);
    CHECK(s.to_string() == "<{x4,x5},{x3,x5},{x2,x5},{x1,x5}>");
    CHECK(dual_generators(s) == star);

    CHECK(dual_facets(parse_ideal("vars x1 x2\nx1")).to_string() == "<{x2}>");
    CHECK(dual_generators(fixtures::complex({"x1", "x2"}, {{"x1"}})).to_string() == "(x2)");
}

TEST_CASE("dual facets and generators reject degenerate input")
{
    try {
        dual_facets(parse_ideal("vars x1 x2\nx1*x2"));
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("x1*x2") != std::string::npos);
    }
    CHECK_THROWS_AS(dual_facets(parse_ideal("vars x1 x2\nx1^2")), std::invalid_argument);
    CHECK_THROWS_AS(dual_generators(fixtures::complex({"a", "b"}, {{"a", "b"}})), std::invalid_argument);
    CHECK_THROWS_AS(dual_generators(SimplicialComplex(VariableSet::make({"a"}), {})), std::invalid_argument);
}

TEST_CASE("the fast path agrees with the definition")
{
    auto example = fixtures::example_ideal();
    auto d = dual_facets(example);
    auto dual = alexander_dual(d);
    REQUIRE(dual.has_value());
    auto via_sr = sr_ideal(*dual);
    REQUIRE(via_sr.has_value());
    CHECK(same_ideal(*via_sr, example));
    CHECK(*alexander_dual(*dual) == d);
}

TEST_CASE("property: duality against brute force")
{
    gen::Rng rng(31);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t n = gen::uniform(rng, 1, 6);
        auto d = gen::complex(rng, n, 5, true);
        auto fs = oracle::facets_of(d);
        int ni = static_cast<int>(n);

        auto i = sr_ideal(d);
        auto nonfaces = oracle::minimal_nonfaces(ni, fs);
        CHECK(i.has_value() == !nonfaces.empty());
        if (i) {
            auto got = faces_of_ideal(*i);
            CHECK(got == oracle::Faces(nonfaces.begin(), nonfaces.end()));
            CHECK(sr_complex(*i) == d);
        }

        auto dual = alexander_dual(d);
        auto expect = oracle::alexander_dual(ni, fs);
        CHECK(dual.has_value() == expect.has_value());
        if (!dual || !expect)
            continue;
        CHECK(sorted(oracle::facets_of(*dual)) == oracle::Faces(expect->begin(), expect->end()));
        auto twice = alexander_dual(*dual);
        REQUIRE(twice.has_value());
        CHECK(*twice == d);

        // N(Δ^∨) two ways, when every facet is proper and nonempty
        bool proper = !d.is_empty();
        for (auto f : d.facets())
            proper = proper && f != d.universe_mask();
        if (proper) {
            auto g = dual_generators(d);
            auto sr = sr_ideal(*dual);
            REQUIRE(sr.has_value());
            CHECK(same_ideal(g, *sr));
            CHECK(dual_facets(g) == d);
        }
    }
}

TEST_CASE("property: dual_facets inverts dual_generators on ideals")
{
    gen::Rng rng(32);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = gen::uniform(rng, 2, 7);
        auto v = VariableSet::indexed("x", n);
        auto i = gen::ideal(rng, v, 6, 1);
        bool full = false;
        for (const auto& g : i.generators())
            full = full || g.support() == full_mask(n);
        if (full)
            continue;
        auto d = dual_facets(i);
        CHECK(dual_generators(d) == i);
        for (std::size_t k = 0; k < i.size(); ++k)
            CHECK((d.facet(k) | i.generator(k).support()) == full_mask(n));
    }
}
