#pragma once

#include <span>
#include <vector>

#include "monores/monomial.hpp"

namespace monores::detail {

// Inclusion-maximal nonempty members, duplicates dropped, first-occurrence order.
std::vector<VertexMask> maximal_sets(std::span<const VertexMask> sets);

}  // namespace monores::detail
