#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace monores {

/// Subset of a variable (or vertex) universe; bit i is variable i.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 64;

inline VertexMask full_mask(std::size_t n)
{
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Ordered list of distinct variable names.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    /// x1..xn style names with the given prefix.
    static std::shared_ptr<const VariableSet> indexed(std::string_view prefix, std::size_t n);
    static std::shared_ptr<const VariableSet> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Throws std::invalid_argument naming the unknown variable.
    std::size_t require_index(std::string_view name) const;
    /// Mask of the named variables; throws on unknown names.
    VertexMask mask_of(std::span<const std::string> names) const;
    std::vector<std::string> names_in(VertexMask mask) const;

    bool operator==(const VariableSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

bool same_vars(const VarsPtr& a, const VarsPtr& b);

/// The variables of `vars` selected by `mask`, in their original order.
VarsPtr restrict_vars(const VarsPtr& vars, VertexMask mask);

/// Re-index `mask` (over the full set) onto the compressed positions of `within`.
VertexMask compress_mask(VertexMask mask, VertexMask within);
/// Inverse of compress_mask.
VertexMask expand_mask(VertexMask compressed, VertexMask within);

/// Exponent vector over a VariableSet.
class Monomial {
public:
    Monomial(VarsPtr vars, std::vector<unsigned> exponents);

    static Monomial one(VarsPtr vars);
    static Monomial from_mask(VarsPtr vars, VertexMask support);

    const VarsPtr& vars() const { return vars_; }
    std::span<const unsigned> exponents() const { return exps_; }
    unsigned exponent(std::size_t i) const { return exps_.at(i); }
    std::size_t size() const { return exps_.size(); }

    bool is_one() const;
    bool is_squarefree() const;
    unsigned degree() const;
    VertexMask support() const;

    /// "x1*x3^2", or "1" for the constant monomial.
    std::string to_string() const;

    friend bool operator==(const Monomial& a, const Monomial& b);
    /// Lexicographic on exponent vectors; only meaningful over the same variables.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    VarsPtr vars_;
    std::vector<unsigned> exps_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// b / a; throws std::invalid_argument unless a divides b.
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial operator*(const Monomial& a, const Monomial& b);

/// Monomial ideal with an ordered minimal generating set.
///
/// Generator order is part of the value: it fixes vertex indices of every
/// complex built from the ideal. Use same_ideal() for set equality.
class MonomialIdeal {
public:
    /// Throws unless `generators` is a nonempty antichain of non-unit monomials over `vars`.
    MonomialIdeal(VarsPtr vars, std::vector<Monomial> generators);

    const VarsPtr& vars() const { return vars_; }
    std::span<const Monomial> generators() const { return gens_; }
    const Monomial& generator(std::size_t i) const { return gens_.at(i); }
    std::size_t size() const { return gens_.size(); }
    bool is_squarefree() const;
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    VarsPtr vars_;
    std::vector<Monomial> gens_;
};

/// Order-insensitive equality of generating sets.
bool same_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Keeps the divisibility-minimal elements, first occurrence order, no duplicates.
MonomialIdeal minimalize(std::span<const Monomial> gens);

struct Polarization {
    MonomialIdeal ideal;
    /// For each new variable: (original variable index, 1-based copy index).
    std::vector<std::pair<std::size_t, unsigned>> origin;
};

Polarization polarize(const MonomialIdeal& ideal);

/// The ideal (gcd(m_i, prod_{x in W} x))_i minimalized, over the variables in W.
/// std::nullopt is the unit-ideal outcome (some generator lies outside W).
std::optional<MonomialIdeal> restrict_ideal(const MonomialIdeal& ideal, VertexMask w);
std::optional<MonomialIdeal> restrict_ideal(const MonomialIdeal& ideal,
                                            std::span<const std::string> names);

}  // namespace monores
