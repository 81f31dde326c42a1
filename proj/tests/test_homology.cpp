#include <doctest.h>

#include "monores/duality.hpp"
#include "monores/homology.hpp"
#include "monores/io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace monores;

namespace {

std::vector<std::vector<oracle::Q>> to_oracle(const ExactMatrix& m)
{
    std::vector<std::vector<oracle::Q>> out(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m.at(r, c);
    return out;
}

std::vector<std::size_t> trim(std::vector<std::size_t> v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

/// Rank-r integer matrix as a product of random factors.
IntMatrix low_rank(gen::Rng& rng, std::size_t rows, std::size_t cols, std::size_t r, long long bound)
{
    auto a = gen::int_matrix(rng, rows, r, bound);
    auto b = gen::int_matrix(rng, r, cols, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < r; ++k)
                m.at(i, j) += a.at(i, k) * b.at(k, j);
    return m;
}

}  // namespace

TEST_CASE("rank of small matrices")
{
    IntMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        id.at(i, i) = 1;
    CHECK(rank_exact(id) == 3);
    CHECK(rank_exact(IntMatrix(4, 5)) == 0);
    CHECK(rank_exact(IntMatrix(0, 3)) == 0);

    // star-shaped degree-2 frame matrix: one +1 and one -1 per column
    IntMatrix star(4, 3);
    star.at(0, 0) = 1;
    star.at(2, 0) = -1;
    star.at(1, 1) = 1;
    star.at(2, 1) = -1;
    star.at(2, 2) = 1;
    star.at(3, 2) = -1;
    CHECK(rank_exact(star) == 3);

    ExactMatrix half(2, 2);
    half.at(0, 0) = Rational(1, 2);
    half.at(0, 1) = Rational(1, 3);
    half.at(1, 0) = Rational(3, 2);
    half.at(1, 1) = 1;
    CHECK(rank_exact(half) == 1);
    CHECK(half.at(0, 0) == Rational(2, 4));
}

TEST_CASE("rank survives entries past 64 bits")
{
    ExactMatrix m(3, 3);
    Rational big(boost::multiprecision::cpp_int(1) << 80);
    // rows 0 and 1 differ by a factor of 2^80 + 1; row 2 is independent
    for (std::size_t c = 0; c < 3; ++c) {
        m.at(0, c) = Rational(static_cast<int>(c + 1));
        m.at(1, c) = m.at(0, c) * (big + 1);
    }
    m.at(2, 0) = big;
    m.at(2, 1) = 1;
    m.at(2, 2) = big * big;
    CHECK(rank_exact(m) == 2);

    IntMatrix wide(3, 3);
    const long long h = 3037000499LL;  // floor(sqrt(2^63 - 1))
    wide.at(0, 0) = h;
    wide.at(0, 1) = h - 1;
    wide.at(1, 0) = h - 2;
    wide.at(1, 1) = h;
    wide.at(2, 0) = 2 * h - 2;
    wide.at(2, 1) = 2 * h - 1;
    CHECK(rank_exact(wide) == 2);
}

TEST_CASE("property: exact rank agrees with plain elimination")
{
    gen::Rng rng(51);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t rows = gen::uniform(rng, 1, 7);
        std::size_t cols = gen::uniform(rng, 1, 7);
        std::size_t r = gen::uniform(rng, 0, std::min(rows, cols));
        long long bound = iter % 4 == 0 ? 2000000000LL : 3;
        auto m = low_rank(rng, rows, cols, r, iter % 4 == 0 ? 40000 : 3);
        auto e = ExactMatrix::from_integers(m);
        std::size_t expect = oracle::rank(to_oracle(e));
        CHECK(expect <= r);
        CHECK(rank_exact(m) == expect);
        CHECK(rank_exact(e.transpose()) == expect);
        auto noise = gen::int_matrix(rng, rows, cols, bound);
        CHECK(rank_exact(noise) == oracle::rank(to_oracle(ExactMatrix::from_integers(noise))));
    }
}

TEST_CASE("property: rational rank agrees with plain elimination")
{
    gen::Rng rng(52);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t rows = gen::uniform(rng, 1, 5);
        std::size_t cols = gen::uniform(rng, 1, 5);
        ExactMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (gen::uniform(rng, 0, 2))
                    m.at(r, c) = Rational(static_cast<long long>(gen::uniform(rng, 0, 6)) - 3,
                                          static_cast<long long>(gen::uniform(rng, 1, 4)));
        // duplicate a scaled row now and then to force dependence
        if (rows > 1 && iter % 2 == 0)
            for (std::size_t c = 0; c < cols; ++c)
                m.at(rows - 1, c) = m.at(0, c) * Rational(5, 7);
        CHECK(rank_exact(m) == oracle::rank(to_oracle(m)));
    }
}

TEST_CASE("reduced homology of small complexes")
{
    auto two = fixtures::complex({"a", "b"}, {{"a"}, {"b"}});
    auto h = reduced_homology_dims(two);
    CHECK(h.dim(0) == 1);
    CHECK(h.dim(-1) == 0);
    CHECK_FALSE(h.is_acyclic());

    auto circle = reduced_homology_dims(fixtures::hollow_triangle());
    CHECK(circle.dim(1) == 1);
    CHECK(circle.dim(0) == 0);
    CHECK(circle.dim(7) == 0);

    auto tree = fixtures::complex({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "c", "d"}});
    CHECK(reduced_homology_dims(tree).is_acyclic());
    CHECK(reduced_homology_dims(dual_facets(fixtures::example_ideal())).is_acyclic());

    // {∅} carries H̃_{-1}; the void complex carries nothing
    auto empty = reduced_homology_dims(SimplicialComplex(VariableSet::make({"a"}), {}));
    CHECK(empty.dim(-1) == 1);
    auto none = reduced_homology_dims(std::optional<SimplicialComplex>{});
    CHECK(none.is_acyclic());

    std::vector<VertexMask> open{0b01, 0b11};
    CHECK_THROWS_AS(reduced_homology_dims(std::span<const VertexMask>(open)), std::invalid_argument);
}

TEST_CASE("property: reduced homology agrees with brute force")
{
    gen::Rng rng(53);
    for (int iter = 0; iter < 200; ++iter) {
        auto d = gen::complex(rng, gen::uniform(rng, 1, 6), 5, true);
        auto expect = oracle::reduced_homology(oracle::all_faces(oracle::facets_of(d)));
        CHECK(trim(reduced_homology_dims(d).dims) == trim(expect));
        // Euler characteristic of the augmented complex
        long long chi = 0, sign = -1;
        for (auto c : f_vector(d)) {
            sign = -sign;
            chi += sign * static_cast<long long>(c);
        }
        long long hchi = 0;
        sign = 1;
        for (auto x : reduced_homology_dims(d).dims) {
            hchi += sign * static_cast<long long>(x);
            sign = -sign;
        }
        CHECK(hchi == 1 - chi);
    }
}

TEST_CASE("Betti numbers of small ideals")
{
    auto xy = parse_ideal("vars x1 x2\nx1, x2");
    auto b = betti(xy);
    CHECK(b.totals() == std::vector<std::size_t>{1, 2, 1});
    auto v = xy.vars();
    CHECK(b.beta(0, Monomial::one(v)) == 1);
    CHECK(b.beta(1, Monomial::from_mask(v, 0b01)) == 1);
    CHECK(b.beta(1, Monomial::from_mask(v, 0b10)) == 1);
    CHECK(b.beta(2, Monomial::from_mask(v, 0b11)) == 1);
    CHECK(b.beta(2, Monomial::from_mask(v, 0b01)) == 0);
    CHECK(b.projective_dimension() == 2);

    auto example = betti(fixtures::example_ideal());
    CHECK(example.totals() == std::vector<std::size_t>{1, 4, 3});
    CHECK(pd_ideal(fixtures::example_ideal()) == 1);
    CHECK(pd_quotient(fixtures::example_ideal()) == 2);

    auto principal = parse_ideal("vars x1 x2\nx1*x2");
    CHECK(betti(principal).totals() == std::vector<std::size_t>{1, 1});
    CHECK(pd_ideal(principal) == 0);

    auto cycle = fixtures::cycle4_ideal();
    CHECK(betti(cycle).totals() == std::vector<std::size_t>{1, 4, 4, 1});
    CHECK(pd_ideal(cycle) == 2);

    auto star = betti(fixtures::star_ideal());
    CHECK(star.totals() == std::vector<std::size_t>{1, 4, 3});
    // every pairwise lcm is x1x2x3x4
    CHECK(star.beta(2, Monomial::from_mask(fixtures::star_ideal().vars(), 0b1111)) == 3);
}

TEST_CASE("Betti numbers of non-squarefree ideals")
{
    auto square = parse_ideal("vars x\nx^2");
    CHECK(betti(square).totals() == std::vector<std::size_t>{1, 1});
    auto mixed = parse_ideal("vars x y\nx^2, x*y, y^2");
    CHECK(betti(mixed).totals() == std::vector<std::size_t>{1, 3, 2});
    CHECK(pd_quotient(mixed) == pd_quotient(polarize(mixed).ideal));
}

TEST_CASE("Betti guard")
{
    std::string text = "vars";
    for (int i = 1; i <= 13; ++i)
        text += " x" + std::to_string(i);
    text += "\n";
    for (int i = 1; i <= 13; ++i)
        text += (i > 1 ? ", x" : "x") + std::to_string(i);
    CHECK_THROWS_AS(betti(parse_ideal(text)), std::domain_error);
}

TEST_CASE("property: Betti table against the Taylor strands and Hochster's formula")
{
    gen::Rng rng(54);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = gen::uniform(rng, 1, 5);
        auto v = VariableSet::indexed("x", n);
        auto ideal = gen::ideal(rng, v, 6, iter % 3 == 0 ? 3 : 1);
        auto table = betti(ideal);
        CHECK(table == betti_serial(ideal));

        auto expect = oracle::betti_taylor(oracle::exps_of(ideal.generators()));
        std::size_t entries = 0;
        for (const auto& e : table.graded()) {
            oracle::Exps m(e.multidegree.exponents().begin(), e.multidegree.exponents().end());
            auto it = expect.find({e.degree, m});
            REQUIRE(it != expect.end());
            CHECK(it->second == e.beta);
            ++entries;
        }
        CHECK(entries == expect.size());
        CHECK(table.totals() == oracle::totals(expect));

        // β_1 lists the generators once each
        for (const auto& g : ideal.generators())
            CHECK(table.beta(1, g) == 1);
        CHECK(table.totals().at(1) == ideal.size());

        if (ideal.is_squarefree()) {
            oracle::Faces gens;
            for (const auto& g : ideal.generators())
                gens.push_back(oracle::to_face(g.support()));
            CHECK(table.totals() == oracle::betti_hochster(static_cast<int>(n), gens));
        } else {
            CHECK(pd_quotient(ideal) == pd_quotient(polarize(ideal).ideal));
            CHECK(betti(polarize(ideal).ideal).totals() == table.totals());
        }
    }
}

TEST_CASE("frame exactness")
{
    Frame koszul{{1, 2, 1}, {IntMatrix(1, 2), IntMatrix(2, 1)}};
    koszul.differentials[0].at(0, 0) = 1;
    koszul.differentials[0].at(0, 1) = 1;
    koszul.differentials[1].at(0, 0) = 1;
    koszul.differentials[1].at(1, 0) = -1;
    CHECK(is_exact_frame(koszul));

    Frame broken = koszul;
    broken.differentials[1].at(1, 0) = 1;
    CHECK_THROWS_AS(is_exact_frame(broken), std::invalid_argument);

    // two points joined by nothing: H_1 of the frame does not vanish
    Frame gap{{1, 2}, {IntMatrix(1, 2)}};
    gap.differentials[0].at(0, 0) = 1;
    gap.differentials[0].at(0, 1) = 1;
    CHECK_FALSE(is_exact_frame(gap));

    // the disconnected path for (x1, x2, x3) has an exact frame; only the
    // multigraded strand at x1*x2 sees the failure
    auto v = VariableSet::indexed("x", 3);
    std::vector<Monomial> xs{Monomial::from_mask(v, 0b001), Monomial::from_mask(v, 0b010),
                             Monomial::from_mask(v, 0b100)};
    std::vector<Edge> path{{0, 2}, {1, 2}};
    auto t = LabeledComplex::graph(xs, path);
    CHECK(is_exact_frame(frame(homogenize(t))));
    CHECK_FALSE(supports_resolution(t));
    CHECK(betti(parse_ideal("vars x1 x2 x3\nx1, x2, x3")).totals() != homogenize(t).ranks());
}
