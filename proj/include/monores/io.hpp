#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "monores/complex.hpp"
#include "monores/homology.hpp"
#include "monores/monomial.hpp"
#include "monores/resolution.hpp"

namespace monores {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Ideal text: optional `vars a b c` header, then generators separated by
/// newlines or commas, each a `*`-product of `name` or `name^k`. Without a
/// header the variables are taken in order of first appearance. `#` starts a
/// comment.
MonomialIdeal parse_ideal(std::string_view text);
/// Inverse of parse_ideal: header line plus one generator per line.
std::string format_ideal(const MonomialIdeal& ideal);

/// {"vertices": [...], "facets": [[...], ...]}, facet order preserved.
Json complex_to_json(const SimplicialComplex& d);
SimplicialComplex complex_from_json(const Json& j);
/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text);

Json free_complex_to_json(const FreeComplex& c);
FreeComplex free_complex_from_json(const Json& j);

Json betti_to_json(const BettiTable& b);
BettiTable betti_from_json(const Json& j, const VarsPtr& vars);

Json ideal_to_json(const MonomialIdeal& ideal);

/// Undirected graph; vertices carry their labels, edges the lcm of the ends.
std::string tree_to_dot(const LabeledComplex& tree, std::string_view name = "tree");

}  // namespace monores
