#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monores/complex.hpp"
#include "monores/monomial.hpp"
#include "monores/resolution.hpp"

namespace monores {

using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix of exact rationals (kept reduced with positive denominators).
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols);
    static ExactMatrix from_integers(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    ExactMatrix transpose() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const ExactMatrix& m);
std::size_t rank_exact(const IntMatrix& m);

/// Homology of the frame vanishes in every positive degree. Throws
/// std::invalid_argument if consecutive differentials do not compose to zero.
bool is_exact_frame(const Frame& f);

/// Reduced homology dimensions over Q from the augmented chain complex.
/// dims[k + 1] is dim H̃_k for k = -1 .. dim Δ. The complex {∅} has H̃_{-1} = 1;
/// the void complex (nullopt) has no homology at all.
struct ReducedHomology {
    std::vector<std::size_t> dims;
    std::size_t dim(int degree) const;
    bool is_acyclic() const;
};

ReducedHomology reduced_homology_dims(const std::optional<SimplicialComplex>& d);
/// Same, for a downward-closed list of nonempty faces (the empty face is implied).
ReducedHomology reduced_homology_dims(std::span<const VertexMask> faces);

struct BettiEntry {
    std::size_t degree = 0;
    Monomial multidegree;
    std::size_t beta = 0;
};

/// Multigraded Betti numbers of S/I.
class BettiTable {
public:
    explicit BettiTable(std::vector<BettiEntry> entries);

    std::span<const BettiEntry> graded() const { return entries_; }
    /// Total Betti numbers β_0, β_1, ...
    std::vector<std::size_t> totals() const;
    std::size_t beta(std::size_t degree, const Monomial& multidegree) const;
    /// pd(S/I).
    std::size_t projective_dimension() const;

    friend bool operator==(const BettiTable& a, const BettiTable& b);

private:
    std::vector<BettiEntry> entries_;
};

/// β_{i,m}(S/I) = dim H̃_{i-2}(T_{<m}) over the lcm lattice, where T_{<m} is the
/// part of the full simplex on the generators whose face labels strictly divide
/// m. Lattice elements are processed in parallel. Guard: at most 12 generators.
BettiTable betti(const MonomialIdeal& ideal);
/// Serial reference of betti().
BettiTable betti_serial(const MonomialIdeal& ideal);

/// pd(S/I).
std::size_t pd_quotient(const MonomialIdeal& ideal);
/// pd(I) = pd(S/I) - 1.
std::size_t pd_ideal(const MonomialIdeal& ideal);

}  // namespace monores
