#include "monores/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace monores {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line), column_(column)
{
}

namespace {

bool name_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

class IdealLexer {
public:
    explicit IdealLexer(std::string_view text) : text_(text) {}

    struct Factor {
        std::string name;
        unsigned exponent;
        std::size_t line;
        std::size_t column;
    };
    using Generator = std::vector<Factor>;

    std::optional<std::vector<std::string>> header;
    std::vector<Generator> generators;

    void run()
    {
        skip_blank(true);
        if (at_word("vars")) {
            advance(4);
            header.emplace();
            skip_blank(false);
            while (!done() && peek() != '\n') {
                if (!name_start(peek()))
                    fail("expected a variable name in the vars header");
                header->push_back(read_name());
                skip_blank(false);
            }
            if (header->empty())
                fail("vars header lists no variables");
        }
        for (;;) {
            skip_blank(true);
            if (done())
                break;
            generators.push_back(read_generator());
            skip_blank(false);
            if (done())
                break;
            if (peek() == ',' || peek() == '\n') {
                advance(1);
                continue;
            }
            fail(std::string("unexpected character '") + peek() + "'");
        }
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, col_, message); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance(std::size_t n)
    {
        for (; n > 0 && !done(); --n) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    bool at_word(std::string_view w) const
    {
        if (text_.substr(pos_, w.size()) != w)
            return false;
        std::size_t end = pos_ + w.size();
        return end == text_.size() || !name_char(text_[end]);
    }

    // Skips spaces and comments; newlines too when `newlines` is set.
    void skip_blank(bool newlines)
    {
        while (!done()) {
            char c = peek();
            if (c == '#') {
                while (!done() && peek() != '\n')
                    advance(1);
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                advance(1);
            } else {
                break;
            }
        }
    }

    std::string read_name()
    {
        std::size_t start = pos_;
        while (!done() && name_char(peek()))
            advance(1);
        return std::string(text_.substr(start, pos_ - start));
    }

    Generator read_generator()
    {
        Generator g;
        for (;;) {
            skip_blank(false);
            if (done() || !name_start(peek()))
                fail(done() ? "expected a variable name before end of input" : "expected a variable name");
            Factor f{"", 1, line_, col_};
            f.name = read_name();
            skip_blank(false);
            if (!done() && peek() == '^') {
                advance(1);
                skip_blank(false);
                std::size_t start = pos_;
                while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
                    advance(1);
                if (start == pos_)
                    fail("expected an exponent after '^'");
                auto digits = text_.substr(start, pos_ - start);
                if (digits.size() > 6)
                    fail("exponent too large");
                f.exponent = static_cast<unsigned>(std::stoul(std::string(digits)));
                if (f.exponent == 0)
                    fail("exponent must be positive");
                skip_blank(false);
            }
            g.push_back(std::move(f));
            if (!done() && peek() == '*') {
                advance(1);
                continue;
            }
            return g;
        }
    }
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text)
{
    IdealLexer lex(text);
    lex.run();
    if (lex.generators.empty())
        lex.fail("no generators");

    std::vector<std::string> names;
    if (lex.header) {
        names = *lex.header;
    } else {
        for (const auto& g : lex.generators)
            for (const auto& f : g)
                if (std::find(names.begin(), names.end(), f.name) == names.end())
                    names.push_back(f.name);
    }
    VarsPtr vars;
    try {
        vars = VariableSet::make(names);
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }

    std::vector<Monomial> gens;
    for (const auto& g : lex.generators) {
        std::vector<unsigned> e(vars->size(), 0);
        for (const auto& f : g) {
            auto i = vars->index_of(f.name);
            if (!i)
                throw ParseError(f.line, f.column, "variable '" + f.name + "' is not in the vars header");
            e[*i] += f.exponent;
        }
        gens.emplace_back(vars, std::move(e));
    }
    return MonomialIdeal(vars, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal)
{
    std::string out = "vars";
    for (const auto& n : ideal.vars()->names())
        out += " " + n;
    out += '\n';
    for (const auto& g : ideal.generators())
        out += g.to_string() + '\n';
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> as_names(const Json& j, const char* what)
{
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw std::invalid_argument(std::string(what) + " must be an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

Json exps_json(const Monomial& m)
{
    return Json(std::vector<unsigned>(m.exponents().begin(), m.exponents().end()));
}

Monomial monomial_from_json(const Json& j, const VarsPtr& vars)
{
    auto e = j.get<std::vector<unsigned>>();
    return Monomial(vars, std::move(e));
}

}  // namespace

Json complex_to_json(const SimplicialComplex& d)
{
    Json facets = Json::array();
    for (auto f : d.facets())
        facets.push_back(d.universe()->names_in(f));
    return {{"vertices", d.universe()->names()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j)
{
    auto vars = VariableSet::make(as_names(field(j, "vertices"), "vertices"));
    const Json& fj = field(j, "facets");
    if (!fj.is_array())
        throw std::invalid_argument("facets must be an array");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : fj)
        facets.push_back(as_names(f, "a facet"));
    return SimplicialComplex::from_names(vars, facets);
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        auto colon = what.rfind(": ");
        throw ParseError(line, col, colon == std::string::npos ? what : what.substr(colon + 2));
    }
}

Json free_complex_to_json(const FreeComplex& c)
{
    Json multidegrees = Json::array();
    for (std::size_t i = 0; i <= c.length(); ++i) {
        Json row = Json::array();
        for (const auto& m : c.module(i))
            row.push_back(exps_json(m));
        multidegrees.push_back(row);
    }
    Json diffs = Json::array();
    for (std::size_t i = 1; i <= c.length(); ++i) {
        Json entries = Json::array();
        for (const auto& e : c.differential(i))
            entries.push_back(
                {{"row", e.row}, {"col", e.col}, {"sign", e.sign}, {"monomial", exps_json(e.monomial)}});
        diffs.push_back(entries);
    }
    return {{"vars", c.vars()->names()},
            {"ranks", c.ranks()},
            {"multidegrees", multidegrees},
            {"differentials", diffs}};
}

FreeComplex free_complex_from_json(const Json& j)
{
    auto vars = VariableSet::make(as_names(field(j, "vars"), "vars"));
    std::vector<std::vector<Monomial>> modules;
    for (const auto& row : field(j, "multidegrees")) {
        modules.emplace_back();
        for (const auto& m : row)
            modules.back().push_back(monomial_from_json(m, vars));
    }
    auto ranks = field(j, "ranks").get<std::vector<std::size_t>>();
    if (ranks.size() != modules.size())
        throw std::invalid_argument("ranks and multidegrees disagree in length");
    for (std::size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] != modules[i].size())
            throw std::invalid_argument("rank " + std::to_string(i) + " does not match its multidegrees");
    std::vector<std::vector<DifferentialEntry>> diffs;
    for (const auto& d : field(j, "differentials")) {
        diffs.emplace_back();
        for (const auto& e : d)
            diffs.back().push_back({field(e, "row").get<std::size_t>(), field(e, "col").get<std::size_t>(),
                                    field(e, "sign").get<int>(), monomial_from_json(field(e, "monomial"), vars)});
    }
    return FreeComplex(std::move(modules), std::move(diffs));
}

Json betti_to_json(const BettiTable& b)
{
    Json graded = Json::array();
    for (const auto& e : b.graded())
        graded.push_back({{"i", e.degree}, {"multidegree", exps_json(e.multidegree)}, {"beta", e.beta}});
    return {{"total", b.totals()}, {"graded", graded}};
}

BettiTable betti_from_json(const Json& j, const VarsPtr& vars)
{
    std::vector<BettiEntry> entries;
    for (const auto& e : field(j, "graded"))
        entries.push_back({field(e, "i").get<std::size_t>(), monomial_from_json(field(e, "multidegree"), vars),
                           field(e, "beta").get<std::size_t>()});
    BettiTable table(std::move(entries));
    if (table.totals() != field(j, "total").get<std::vector<std::size_t>>())
        throw std::invalid_argument("total Betti numbers do not match the graded entries");
    return table;
}

Json ideal_to_json(const MonomialIdeal& ideal)
{
    Json gens = Json::array();
    for (const auto& g : ideal.generators())
        gens.push_back(g.to_string());
    return {{"vars", ideal.vars()->names()}, {"generators", gens}};
}

std::string tree_to_dot(const LabeledComplex& tree, std::string_view name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t v = 0; v < tree.vertex_count(); ++v)
        out << "  v" << v + 1 << " [label=\"" << tree.label(v).to_string() << "\"];\n";
    for (auto [a, b] : tree.edges())
        out << "  v" << a + 1 << " -- v" << b + 1 << " [label=\""
            << lcm(tree.label(a), tree.label(b)).to_string() << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace monores
