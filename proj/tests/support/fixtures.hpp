#pragma once

#include <string>
#include <vector>

#include "monores/complex.hpp"
#include "monores/io.hpp"
#include "monores/monomial.hpp"

namespace fixtures {

inline monores::MonomialIdeal example_ideal()
{
    return monores::parse_ideal("vars x1 x2 x3 x4 x5 x6\nx1*x3*x6, x1*x4*x6, x1*x2*x4, x4*x5*x6\n");
}

inline monores::MonomialIdeal star_ideal()
{
    return monores::parse_ideal("vars x1 x2 x3 x4\nx1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4\n");
}

inline monores::MonomialIdeal cycle4_ideal()
{
    return monores::parse_ideal("vars x1 x2 x3 x4\nx1*x2, x2*x3, x3*x4, x4*x1\n");
}

inline monores::SimplicialComplex hollow_triangle()
{
    auto vars = monores::VariableSet::make({"a", "b", "c"});
    return monores::SimplicialComplex::from_names(vars, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

/// A quasi-tree that is not a simplicial forest: the three outer triangles
/// have no leaf among themselves.
inline monores::SimplicialComplex quasi_tree_not_forest()
{
    auto vars = monores::VariableSet::make({"a", "b", "c", "d", "e", "f"});
    return monores::SimplicialComplex::from_names(
        vars, {{"a", "b", "c"}, {"a", "b", "d"}, {"b", "c", "e"}, {"a", "c", "f"}});
}

inline monores::SimplicialComplex complex(const std::vector<std::string>& vertices,
                                          const std::vector<std::vector<std::string>>& facets)
{
    return monores::SimplicialComplex::from_names(monores::VariableSet::make(vertices), facets);
}

}  // namespace fixtures
