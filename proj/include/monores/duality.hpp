#pragma once

#include <optional>

#include "monores/complex.hpp"
#include "monores/monomial.hpp"

namespace monores {

// All duality is taken relative to the stored vertex universe, never V(Δ).

/// N(Δ): generated by the minimal non-faces. nullopt is the zero ideal (Δ is the
/// full simplex on its universe). Guard: universe of at most 20 vertices.
std::optional<MonomialIdeal> sr_ideal(const SimplicialComplex& d);

/// N(I): supports of the squarefree monomials outside I. Throws on
/// non-squarefree input. Guard: at most 20 variables.
SimplicialComplex sr_complex(const MonomialIdeal& ideal);

/// Δ^∨ = { V ∖ τ : τ ∉ Δ }. nullopt is the void complex (Δ is the full simplex).
std::optional<SimplicialComplex> alexander_dual(const SimplicialComplex& d);

/// N(I^∨) directly: facet i is the complement of supp(m_i), in generator order.
SimplicialComplex dual_facets(const MonomialIdeal& ideal);

/// N(Δ^∨) directly: generator i is the product of the variables outside facet i.
MonomialIdeal dual_generators(const SimplicialComplex& d);

}  // namespace monores
