#include "monores/monomial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monores {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty())
        throw std::invalid_argument("variable set must be nonempty");
    if (names_.size() > kMaxVariables)
        throw std::invalid_argument("at most 64 variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("variable names must be nonempty");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
    }
}

VarsPtr VariableSet::indexed(std::string_view prefix, std::size_t n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back(std::string(prefix) + std::to_string(i));
    return make(std::move(names));
}

VarsPtr VariableSet::make(std::vector<std::string> names)
{
    return std::make_shared<const VariableSet>(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t VariableSet::require_index(std::string_view name) const
{
    if (auto i = index_of(name))
        return *i;
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

VertexMask VariableSet::mask_of(std::span<const std::string> names) const
{
    VertexMask m = 0;
    for (const auto& n : names)
        m |= VertexMask{1} << require_index(n);
    return m;
}

std::vector<std::string> VariableSet::names_in(VertexMask mask) const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (mask >> i & 1)
            out.push_back(names_[i]);
    return out;
}

bool same_vars(const VarsPtr& a, const VarsPtr& b)
{
    return a == b || (a && b && *a == *b);
}

VarsPtr restrict_vars(const VarsPtr& vars, VertexMask mask)
{
    if (mask & ~full_mask(vars->size()))
        throw std::invalid_argument("subset is not contained in the variable set");
    return VariableSet::make(vars->names_in(mask));
}

VertexMask compress_mask(VertexMask mask, VertexMask within)
{
    VertexMask out = 0;
    int pos = 0;
    for (VertexMask w = within; w; w &= w - 1, ++pos) {
        VertexMask bit = w & -w;
        if (mask & bit)
            out |= VertexMask{1} << pos;
    }
    return out;
}

VertexMask expand_mask(VertexMask compressed, VertexMask within)
{
    VertexMask out = 0;
    int pos = 0;
    for (VertexMask w = within; w; w &= w - 1, ++pos)
        if (compressed >> pos & 1)
            out |= w & -w;
    return out;
}

// ---------------------------------------------------------------------------

Monomial::Monomial(VarsPtr vars, std::vector<unsigned> exponents)
    : vars_(std::move(vars)), exps_(std::move(exponents))
{
    if (!vars_)
        throw std::invalid_argument("monomial needs a variable set");
    if (exps_.size() != vars_->size())
        throw std::invalid_argument("exponent vector length does not match the variable set");
}

Monomial Monomial::one(VarsPtr vars)
{
    std::size_t n = vars->size();
    return Monomial(std::move(vars), std::vector<unsigned>(n, 0));
}

Monomial Monomial::from_mask(VarsPtr vars, VertexMask support)
{
    std::size_t n = vars->size();
    if (support & ~full_mask(n))
        throw std::invalid_argument("support outside the variable set");
    std::vector<unsigned> e(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        e[i] = support >> i & 1;
    return Monomial(std::move(vars), std::move(e));
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::is_squarefree() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e <= 1; });
}

unsigned Monomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

VertexMask Monomial::support() const
{
    VertexMask m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i])
            m |= VertexMask{1} << i;
    return m;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (!exps_[i])
            continue;
        if (!out.empty())
            out += '*';
        out += vars_->name(i);
        if (exps_[i] > 1)
            out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

bool operator==(const Monomial& a, const Monomial& b)
{
    return a.exps_ == b.exps_ && same_vars(a.vars_, b.vars_);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    return a.exps_ <=> b.exps_;
}

namespace {

void require_same_vars(const Monomial& a, const Monomial& b)
{
    if (!same_vars(a.vars(), b.vars()))
        throw std::invalid_argument("monomials are over different variable sets");
}

}  // namespace

bool divides(const Monomial& a, const Monomial& b)
{
    require_same_vars(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.exponent(i) > b.exponent(i))
            return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    require_same_vars(a, b);
    std::vector<unsigned> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(a.vars(), std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    require_same_vars(a, b);
    std::vector<unsigned> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.exponent(i), b.exponent(i));
    return Monomial(a.vars(), std::move(e));
}

Monomial quotient(const Monomial& b, const Monomial& a)
{
    if (!divides(a, b))
        throw std::invalid_argument(a.to_string() + " does not divide " + b.to_string());
    std::vector<unsigned> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = b.exponent(i) - a.exponent(i);
    return Monomial(a.vars(), std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    require_same_vars(a, b);
    std::vector<unsigned> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = a.exponent(i) + b.exponent(i);
    return Monomial(a.vars(), std::move(e));
}

// ---------------------------------------------------------------------------

MonomialIdeal::MonomialIdeal(VarsPtr vars, std::vector<Monomial> generators)
    : vars_(std::move(vars)), gens_(std::move(generators))
{
    if (gens_.empty())
        throw std::invalid_argument("an ideal needs at least one generator");
    for (const auto& g : gens_) {
        if (!same_vars(g.vars(), vars_))
            throw std::invalid_argument("generator " + g.to_string() +
                                        " is over a different variable set");
        if (g.is_one())
            throw std::invalid_argument("the unit monomial cannot be a generator of a proper ideal");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (i != j && divides(gens_[i], gens_[j]))
                throw std::invalid_argument("generators are not minimal: " + gens_[i].to_string() +
                                            " divides " + gens_[j].to_string());
}

bool MonomialIdeal::is_squarefree() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

std::string MonomialIdeal::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
{
    return same_vars(a.vars_, b.vars_) && a.gens_ == b.gens_;
}

bool same_ideal(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (!same_vars(a.vars(), b.vars()) || a.size() != b.size())
        return false;
    std::vector<Monomial> x(a.generators().begin(), a.generators().end());
    std::vector<Monomial> y(b.generators().begin(), b.generators().end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

MonomialIdeal minimalize(std::span<const Monomial> gens)
{
    if (gens.empty())
        throw std::invalid_argument("cannot minimalize an empty generator list");
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_one())
            throw std::invalid_argument("the unit monomial cannot be a generator of a proper ideal");
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j || !divides(gens[j], gens[i]))
                continue;
            // strict divisor, or an equal monomial seen earlier
            redundant = !(gens[j] == gens[i]) || j < i;
        }
        if (!redundant)
            kept.push_back(gens[i]);
    }
    return MonomialIdeal(gens.front().vars(), std::move(kept));
}

Polarization polarize(const MonomialIdeal& ideal)
{
    const auto& vars = *ideal.vars();
    std::vector<unsigned> max_exp(vars.size(), 0);
    for (const auto& g : ideal.generators())
        for (std::size_t i = 0; i < vars.size(); ++i)
            max_exp[i] = std::max(max_exp[i], g.exponent(i));

    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, unsigned>> origin;
    std::vector<std::size_t> first_copy(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        first_copy[i] = names.size();
        if (max_exp[i] <= 1) {
            names.push_back(vars.name(i));
            origin.emplace_back(i, 1);
        } else {
            for (unsigned j = 1; j <= max_exp[i]; ++j) {
                names.push_back(vars.name(i) + "_" + std::to_string(j));
                origin.emplace_back(i, j);
            }
        }
    }
    auto pvars = VariableSet::make(std::move(names));

    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<unsigned> e(pvars->size(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (unsigned j = 0; j < g.exponent(i); ++j)
                e[first_copy[i] + j] = 1;
        gens.emplace_back(pvars, std::move(e));
    }
    return {MonomialIdeal(pvars, std::move(gens)), std::move(origin)};
}

std::optional<MonomialIdeal> restrict_ideal(const MonomialIdeal& ideal, VertexMask w)
{
    if (!ideal.is_squarefree())
        throw std::invalid_argument("restriction requires a squarefree ideal");
    if (w == 0)
        throw std::invalid_argument("restriction subset must be nonempty");
    auto rvars = restrict_vars(ideal.vars(), w);
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        VertexMask s = g.support() & w;
        if (s == 0)
            return std::nullopt;
        gens.push_back(Monomial::from_mask(rvars, compress_mask(s, w)));
    }
    return minimalize(gens);
}

std::optional<MonomialIdeal> restrict_ideal(const MonomialIdeal& ideal,
                                            std::span<const std::string> names)
{
    return restrict_ideal(ideal, ideal.vars()->mask_of(names));
}

}  // namespace monores
