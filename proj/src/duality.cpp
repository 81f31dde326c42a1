#include "monores/duality.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "internal.hpp"

namespace monores {

namespace {

constexpr std::size_t kMaxDualityVertices = 20;

void guard_universe(const VarsPtr& vars)
{
    if (vars->size() > kMaxDualityVertices)
        throw std::domain_error("duality is limited to 20 vertices");
}

bool is_full_simplex(const SimplicialComplex& d)
{
    return d.facet_count() == 1 && d.facet(0) == d.universe_mask();
}

// Candidates are σ ∪ {v} for faces σ (including ∅): every minimal non-face
// arises this way, so the search never leaves the face poset's boundary.
std::vector<VertexMask> minimal_non_faces(const SimplicialComplex& d)
{
    guard_universe(d.universe());
    std::vector<VertexMask> face_list = faces(d);
    face_list.insert(face_list.begin(), VertexMask{0});
    VertexMask all = d.universe_mask();

    std::unordered_set<VertexMask> seen;
    std::vector<VertexMask> out;
    for (auto sigma : face_list) {
        for (VertexMask rest = all & ~sigma; rest; rest &= rest - 1) {
            VertexMask tau = sigma | (rest & -rest);
            if (!seen.insert(tau).second || d.contains_face(tau))
                continue;
            bool minimal = true;
            for (VertexMask m = tau; m && minimal; m &= m - 1)
                minimal = d.contains_face(tau & ~(m & -m));
            if (minimal)
                out.push_back(tau);
        }
    }
    std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : lex_less(a, b);
    });
    return out;
}

}  // namespace

std::optional<MonomialIdeal> sr_ideal(const SimplicialComplex& d)
{
    if (is_full_simplex(d))
        return std::nullopt;
    std::vector<Monomial> gens;
    for (auto tau : minimal_non_faces(d))
        gens.push_back(Monomial::from_mask(d.universe(), tau));
    return MonomialIdeal(d.universe(), std::move(gens));
}

SimplicialComplex sr_complex(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree())
        throw std::invalid_argument("Stanley-Reisner complex needs a squarefree ideal; polarize first");
    guard_universe(ideal.vars());
    std::vector<VertexMask> supports;
    for (const auto& g : ideal.generators())
        supports.push_back(g.support());
    auto independent = [&](VertexMask s) {
        return std::none_of(supports.begin(), supports.end(),
                            [s](VertexMask g) { return (g & ~s) == 0; });
    };

    VertexMask all = full_mask(ideal.vars()->size());
    std::vector<VertexMask> facets;
    for (VertexMask s = 1; s <= all && s != 0; ++s) {
        if (!independent(s))
            continue;
        bool maximal = true;
        for (VertexMask rest = all & ~s; rest && maximal; rest &= rest - 1)
            maximal = !independent(s | (rest & -rest));
        if (maximal)
            facets.push_back(s);
    }
    std::sort(facets.begin(), facets.end(), lex_less);
    return SimplicialComplex(ideal.vars(), std::move(facets));
}

std::optional<SimplicialComplex> alexander_dual(const SimplicialComplex& d)
{
    if (is_full_simplex(d))
        return std::nullopt;
    VertexMask all = d.universe_mask();
    std::vector<VertexMask> facets;
    for (auto tau : minimal_non_faces(d))
        if (tau != all)
            facets.push_back(all & ~tau);
    std::sort(facets.begin(), facets.end(), lex_less);
    return SimplicialComplex(d.universe(), std::move(facets));
}

SimplicialComplex dual_facets(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree())
        throw std::invalid_argument("facet correspondence needs a squarefree ideal; polarize first");
    VertexMask all = full_mask(ideal.vars()->size());
    std::vector<VertexMask> facets;
    for (const auto& g : ideal.generators()) {
        VertexMask f = all & ~g.support();
        if (f == 0)
            throw std::invalid_argument("generator " + g.to_string() +
                                        " uses every variable, so its facet would be empty");
        facets.push_back(f);
    }
    return SimplicialComplex(ideal.vars(), std::move(facets));
}

MonomialIdeal dual_generators(const SimplicialComplex& d)
{
    if (d.is_empty())
        throw std::invalid_argument("complex has no facets");
    VertexMask all = d.universe_mask();
    std::vector<Monomial> gens;
    for (auto f : d.facets()) {
        if (f == all)
            throw std::invalid_argument("facet " + d.facet_to_string(f) +
                                        " is the whole universe, so its generator would be 1");
        gens.push_back(Monomial::from_mask(d.universe(), all & ~f));
    }
    return MonomialIdeal(d.universe(), std::move(gens));
}

}  // namespace monores
