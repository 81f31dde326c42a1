#pragma once

#include <map>
#include <string>
#include <utility>

#include "monores/resolution.hpp"

namespace compare {

using SignedEntry = std::pair<int, std::string>;
/// column multidegree -> (row multidegree -> signed entry)
using LabeledMatrix = std::map<std::string, std::map<std::string, SignedEntry>>;

inline LabeledMatrix labeled_matrix(const monores::FreeComplex& c, std::size_t degree)
{
    LabeledMatrix out;
    for (const auto& e : c.differential(degree))
        out[c.module(degree)[e.col].to_string()][c.module(degree - 1)[e.row].to_string()] =
            {e.sign, e.monomial.to_string()};
    return out;
}

/// Equal up to row and column permutation (rows and columns are keyed by
/// multidegree) and a sign flip per column.
inline bool equal_up_to_column_signs(const LabeledMatrix& a, const LabeledMatrix& b)
{
    if (a.size() != b.size())
        return false;
    for (const auto& [col, entries] : a) {
        auto it = b.find(col);
        if (it == b.end() || it->second.size() != entries.size())
            return false;
        bool same = true, flipped = true;
        for (const auto& [row, e] : entries) {
            auto jt = it->second.find(row);
            if (jt == it->second.end() || jt->second.second != e.second)
                return false;
            same = same && jt->second.first == e.first;
            flipped = flipped && jt->second.first == -e.first;
        }
        if (!same && !flipped)
            return false;
    }
    return true;
}

}  // namespace compare
