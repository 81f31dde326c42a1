#include "monores/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monores {

using boost::multiprecision::cpp_int;

namespace {

constexpr std::size_t kMaxBettiGenerators = 12;
constexpr std::size_t kMaxHomologyFaces = std::size_t{1} << 16;

struct Overflow {};

long long checked(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw Overflow{};
    return static_cast<long long>(v);
}

// Fraction-free elimination; every intermediate entry is a minor of the input,
// so the divisions by the previous pivot are exact.
template <typename Int, typename Combine>
std::size_t bareiss_rank(std::vector<Int> m, std::size_t rows, std::size_t cols, Combine combine)
{
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * cols + col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m[pivot * cols + j], m[rank * cols + j]);
        const Int p = m[rank * cols + col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Int lead = m[i * cols + col];
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i * cols + j] = combine(p, m[i * cols + j], lead, m[rank * cols + j], prev);
            m[i * cols + col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t rank_small(const std::vector<long long>& data, std::size_t rows, std::size_t cols)
{
    try {
        return bareiss_rank<long long>(data, rows, cols,
                                       [](long long p, long long x, long long lead, long long y, long long prev) {
                                           __int128 num = static_cast<__int128>(p) * x -
                                                          static_cast<__int128>(lead) * y;
                                           return checked(num / prev);
                                       });
    } catch (const Overflow&) {
        std::vector<cpp_int> big(data.begin(), data.end());
        return bareiss_rank<cpp_int>(std::move(big), rows, cols,
                                     [](const cpp_int& p, const cpp_int& x, const cpp_int& lead,
                                        const cpp_int& y, const cpp_int& prev) {
                                         return cpp_int((p * x - lead * y) / prev);
                                     });
    }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

ExactMatrix ExactMatrix::from_integers(const IntMatrix& m)
{
    ExactMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i)
        out.data_[i] = m.data[i];
    return out;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

std::size_t rank_exact(const ExactMatrix& m)
{
    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<cpp_int> ints(m.rows() * m.cols());
    bool small = true;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        cpp_int scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            scale = boost::multiprecision::lcm(scale, cpp_int(denominator(m.at(r, c))));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cpp_int v = numerator(m.at(r, c)) * (scale / denominator(m.at(r, c)));
            small = small && v <= INT64_MAX && v >= INT64_MIN;
            ints[r * m.cols() + c] = std::move(v);
        }
    }
    if (small) {
        std::vector<long long> data;
        data.reserve(ints.size());
        for (const auto& v : ints)
            data.push_back(v.convert_to<long long>());
        return rank_small(data, m.rows(), m.cols());
    }
    return bareiss_rank<cpp_int>(std::move(ints), m.rows(), m.cols(),
                                 [](const cpp_int& p, const cpp_int& x, const cpp_int& lead,
                                    const cpp_int& y, const cpp_int& prev) {
                                     return cpp_int((p * x - lead * y) / prev);
                                 });
}

std::size_t rank_exact(const IntMatrix& m)
{
    return rank_small(m.data, m.rows, m.cols);
}

bool is_exact_frame(const Frame& f)
{
    const auto& d = f.differentials;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        const IntMatrix& a = d[i];
        const IntMatrix& b = d[i + 1];
        for (std::size_t r = 0; r < a.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c) {
                long long s = 0;
                for (std::size_t k = 0; k < a.cols; ++k)
                    s += a.at(r, k) * b.at(k, c);
                if (s != 0)
                    throw std::invalid_argument("frame differentials do not compose to zero");
            }
    }
    std::vector<std::size_t> ranks;
    for (const auto& m : d)
        ranks.push_back(rank_exact(m));
    for (std::size_t i = 1; i < f.dims.size(); ++i) {
        std::size_t in = ranks[i - 1];
        std::size_t out = i < ranks.size() ? ranks[i] : 0;
        if (f.dims[i] != in + out)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

std::size_t ReducedHomology::dim(int degree) const
{
    auto k = static_cast<std::size_t>(degree + 1);
    return degree >= -1 && k < dims.size() ? dims[k] : 0;
}

bool ReducedHomology::is_acyclic() const
{
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

ReducedHomology reduced_homology_dims(std::span<const VertexMask> face_list)
{
    if (face_list.size() > kMaxHomologyFaces)
        throw std::domain_error("too many faces for exact homology");
    std::size_t top = 0;
    for (auto f : face_list)
        top = std::max<std::size_t>(top, static_cast<std::size_t>(std::popcount(f)));

    // chains[k] holds faces of size k; size 0 is the empty face.
    std::vector<std::vector<VertexMask>> chains(top + 1);
    chains[0].push_back(0);
    std::vector<std::unordered_map<VertexMask, std::size_t>> index(top + 1);
    index[0].emplace(0, 0);
    for (auto f : face_list) {
        auto k = static_cast<std::size_t>(std::popcount(f));
        if (index[k].emplace(f, chains[k].size()).second)
            chains[k].push_back(f);
    }

    // rank of the boundary from size-k chains to size-(k-1) chains
    std::vector<std::size_t> boundary_rank(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) {
        IntMatrix m(chains[k - 1].size(), chains[k].size());
        for (std::size_t c = 0; c < chains[k].size(); ++c) {
            VertexMask face = chains[k][c];
            int position = 0;
            for (VertexMask rest = face; rest; rest &= rest - 1, ++position) {
                auto it = index[k - 1].find(face & ~(rest & -rest));
                if (it == index[k - 1].end())
                    throw std::invalid_argument("face list is not closed under taking subfaces");
                m.at(it->second, c) = position % 2 == 0 ? 1 : -1;
            }
        }
        boundary_rank[k] = rank_exact(m);
    }

    ReducedHomology h;
    for (std::size_t k = 0; k <= top; ++k)
        h.dims.push_back(chains[k].size() - boundary_rank[k] - boundary_rank[k + 1]);
    return h;
}

ReducedHomology reduced_homology_dims(const std::optional<SimplicialComplex>& d)
{
    if (!d)
        return ReducedHomology{{0}};
    auto face_list = faces(*d);
    return reduced_homology_dims(face_list);
}

// ---------------------------------------------------------------------------

BettiTable::BettiTable(std::vector<BettiEntry> entries) : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.multidegree < b.multidegree;
    });
}

std::vector<std::size_t> BettiTable::totals() const
{
    std::vector<std::size_t> t;
    for (const auto& e : entries_) {
        if (t.size() <= e.degree)
            t.resize(e.degree + 1, 0);
        t[e.degree] += e.beta;
    }
    return t;
}

std::size_t BettiTable::beta(std::size_t degree, const Monomial& multidegree) const
{
    for (const auto& e : entries_)
        if (e.degree == degree && e.multidegree == multidegree)
            return e.beta;
    return 0;
}

std::size_t BettiTable::projective_dimension() const
{
    std::size_t pd = 0;
    for (const auto& e : entries_)
        if (e.beta)
            pd = std::max(pd, e.degree);
    return pd;
}

bool operator==(const BettiTable& a, const BettiTable& b)
{
    if (a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        const auto& x = a.entries_[i];
        const auto& y = b.entries_[i];
        if (x.degree != y.degree || x.beta != y.beta || !(x.multidegree == y.multidegree))
            return false;
    }
    return true;
}

namespace {

// Nonzero β_{i,m} for one lattice element m.
std::vector<BettiEntry> betti_at(std::span<const Monomial> gens, const Monomial& m)
{
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (divides(gens[i], m))
            below.push_back(i);

    std::size_t count = std::size_t{1} << below.size();
    std::vector<std::optional<Monomial>> label(count);
    label[0] = Monomial::one(m.vars());
    std::vector<VertexMask> face_list;
    for (std::size_t s = 1; s < count; ++s) {
        std::size_t low = s & (~s + 1);
        label[s] = lcm(*label[s & ~low], gens[below[std::countr_zero(low)]]);
        if (!(*label[s] == m))
            face_list.push_back(s);
    }

    std::vector<BettiEntry> out;
    auto h = reduced_homology_dims(face_list);
    for (std::size_t k = 0; k < h.dims.size(); ++k)
        if (h.dims[k])
            out.push_back({k + 1, m, h.dims[k]});
    return out;
}

void guard_betti(const MonomialIdeal& ideal)
{
    if (ideal.size() > kMaxBettiGenerators)
        throw std::domain_error("Betti oracle is limited to 12 generators");
}

BettiTable assemble(const MonomialIdeal& ideal, std::vector<std::vector<BettiEntry>> parts)
{
    std::vector<BettiEntry> all{{0, Monomial::one(ideal.vars()), 1}};
    for (auto& p : parts)
        for (auto& e : p)
            all.push_back(std::move(e));
    return BettiTable(std::move(all));
}

}  // namespace

BettiTable betti(const MonomialIdeal& ideal)
{
    guard_betti(ideal);
    auto lattice = lcm_lattice(ideal);
    std::vector<std::vector<BettiEntry>> parts(lattice.size());
    const auto n = static_cast<long>(lattice.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
        parts[i] = betti_at(ideal.generators(), lattice[i]);
    return assemble(ideal, std::move(parts));
}

BettiTable betti_serial(const MonomialIdeal& ideal)
{
    guard_betti(ideal);
    auto lattice = lcm_lattice(ideal);
    std::vector<std::vector<BettiEntry>> parts;
    parts.reserve(lattice.size());
    for (const auto& m : lattice)
        parts.push_back(betti_at(ideal.generators(), m));
    return assemble(ideal, std::move(parts));
}

std::size_t pd_quotient(const MonomialIdeal& ideal)
{
    return betti(ideal).projective_dimension();
}

std::size_t pd_ideal(const MonomialIdeal& ideal)
{
    return pd_quotient(ideal) - 1;
}

}  // namespace monores
