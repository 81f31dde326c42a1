#include "monores/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "monores/census.hpp"
#include "monores/complex.hpp"
#include "monores/duality.hpp"
#include "monores/homology.hpp"
#include "monores/io.hpp"
#include "monores/monomial.hpp"
#include "monores/resolution.hpp"

namespace monores {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    std::string dot;
    std::string reproducer = "monores-reproducer.json";
    std::string joint = "smallest";
    std::string recognizer = "exhaustive";
    std::uint64_t seed = 1;
    int workers = 0;
    std::size_t max_vertices = 4;
    std::size_t equivalence_max_vertices = 4;
    std::size_t count = 100;
    bool labeled = false;
    bool serial = false;
    bool quotient = false;
};

class Session {
public:
    Session(const Options& o, std::istream& in, std::ostream& out) : opt(o), in_(in), out_(out) {}

    const Options& opt;

    bool json() const { return opt.format == "json"; }

    std::string read_input()
    {
        std::ostringstream buf;
        if (opt.input.empty() || opt.input == "-") {
            buf << in_.rdbuf();
        } else {
            std::ifstream f(opt.input);
            if (!f)
                throw std::runtime_error("cannot open input file '" + opt.input + "'");
            buf << f.rdbuf();
        }
        return buf.str();
    }

    std::ostream& out() { return text_; }

    void emit(const Json& j) { text_ << j.dump(2) << '\n'; }

    void flush()
    {
        if (opt.output.empty() || opt.output == "-") {
            out_ << text_.str();
            return;
        }
        std::ofstream f(opt.output);
        if (!f)
            throw std::runtime_error("cannot open output file '" + opt.output + "'");
        f << text_.str();
    }

    void write_file(const std::string& path, const std::string& content)
    {
        std::ofstream f(path);
        if (!f)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        f << content;
    }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostringstream text_;
};

bool is_json_text(const std::string& text)
{
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

// An ideal, or a complex Δ standing for N(Δ^∨).
MonomialIdeal load_ideal(Session& s)
{
    auto text = s.read_input();
    if (is_json_text(text))
        return dual_generators(complex_from_json(parse_json(text)));
    return parse_ideal(text);
}

// A complex, or an ideal I standing for N(I^∨).
SimplicialComplex load_complex(Session& s)
{
    auto text = s.read_input();
    if (is_json_text(text))
        return complex_from_json(parse_json(text));
    return dual_facets(parse_ideal(text));
}

MonomialIdeal require_squarefree(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree())
        throw std::invalid_argument("ideal " + ideal.to_string() + " is not squarefree; run polarize first");
    return ideal;
}

std::string order_string(std::span<const std::size_t> order)
{
    std::string s;
    for (std::size_t i = 0; i < order.size(); ++i)
        s += (i ? "," : "") + std::string("F") + std::to_string(order[i] + 1);
    return s;
}

Json order_json(std::span<const std::size_t> order)
{
    Json j = Json::array();
    for (auto i : order)
        j.push_back(i + 1);
    return j;
}

void write_ideal_text(std::ostream& out, const std::optional<MonomialIdeal>& ideal)
{
    if (ideal)
        out << format_ideal(*ideal);
    else
        out << "0\n";
}

Json tree_json(const LabeledComplex& t)
{
    Json labels = Json::array();
    for (const auto& l : t.labels())
        labels.push_back(l.to_string());
    Json edges = Json::array();
    for (auto [a, b] : t.edges())
        edges.push_back({{"source", a + 1}, {"target", b + 1}, {"label", lcm(t.label(a), t.label(b)).to_string()}});
    return {{"labels", labels}, {"edges", edges}};
}

void write_tree_text(std::ostream& out, const LabeledComplex& t)
{
    for (std::size_t v = 0; v < t.vertex_count(); ++v)
        out << "v" << v + 1 << "  " << t.label(v).to_string() << '\n';
    for (auto [a, b] : t.edges())
        out << "v" << a + 1 << " -- v" << b + 1 << "  " << lcm(t.label(a), t.label(b)).to_string() << '\n';
}

std::string entry_string(const DifferentialEntry& e)
{
    std::string m = e.monomial.to_string();
    return e.sign < 0 ? "-" + m : m;
}

void write_free_complex_text(std::ostream& out, const FreeComplex& c)
{
    out << "ranks";
    for (auto r : c.ranks())
        out << ' ' << r;
    out << '\n';
    for (std::size_t i = 0; i <= c.length(); ++i) {
        out << "F" << i << ":";
        for (const auto& m : c.module(i))
            out << ' ' << m.to_string();
        out << '\n';
    }
    for (std::size_t i = 1; i <= c.length(); ++i) {
        std::size_t rows = c.module(i - 1).size();
        std::size_t cols = c.module(i).size();
        std::vector<std::string> cell(rows * cols, "0");
        for (const auto& e : c.differential(i))
            cell[e.row * cols + e.col] = entry_string(e);
        std::size_t width = 1;
        for (const auto& x : cell)
            width = std::max(width, x.size());
        out << "d" << i << ":\n";
        for (std::size_t r = 0; r < rows; ++r) {
            out << " ";
            for (std::size_t col = 0; col < cols; ++col)
                out << ' ' << std::string(width - cell[r * cols + col].size(), ' ') << cell[r * cols + col];
            out << '\n';
        }
    }
}

void write_betti_text(std::ostream& out, const BettiTable& b)
{
    out << "total";
    for (auto t : b.totals())
        out << ' ' << t;
    out << '\n';
    for (const auto& e : b.graded())
        out << "beta_" << e.degree << "," << e.multidegree.to_string() << " = " << e.beta << '\n';
}

// ---------------------------------------------------------------------------

int cmd_dual(Session& s)
{
    auto text = s.read_input();
    if (is_json_text(text)) {
        auto ideal = dual_generators(complex_from_json(parse_json(text)));
        if (s.json())
            s.emit(ideal_to_json(ideal));
        else
            s.out() << format_ideal(ideal);
        return 0;
    }
    auto d = dual_facets(parse_ideal(text));
    if (s.json())
        s.emit(complex_to_json(d));
    else
        for (auto f : d.facets())
            s.out() << d.facet_to_string(f) << '\n';
    return 0;
}

int cmd_sr(Session& s)
{
    auto text = s.read_input();
    if (is_json_text(text)) {
        auto ideal = sr_ideal(complex_from_json(parse_json(text)));
        if (s.json())
            s.emit(ideal ? ideal_to_json(*ideal) : Json{{"zero", true}});
        else
            write_ideal_text(s.out(), ideal);
        return 0;
    }
    auto d = sr_complex(parse_ideal(text));
    if (s.json())
        s.emit(complex_to_json(d));
    else
        s.out() << d.to_string() << '\n';
    return 0;
}

int cmd_quasiforest(Session& s)
{
    auto d = load_complex(s);
    const auto& mode = s.opt.recognizer;
    std::optional<std::vector<std::size_t>> order;
    bool yes = false;
    if (mode == "induced") {
        yes = is_quasi_forest_by_induced(d);
        if (yes)
            order = leaf_order(d, LeafOrderMode::Exhaustive);
    } else {
        order = leaf_order(d, mode == "greedy" ? LeafOrderMode::Greedy : LeafOrderMode::Exhaustive);
        yes = order.has_value();
    }
    bool connected = is_connected(d);
    if (s.json()) {
        s.emit({{"quasi_forest", yes},
                {"connected", connected},
                {"leaf_order", order ? order_json(*order) : Json(nullptr)},
                {"recognizer", mode}});
    } else if (yes) {
        s.out() << (connected ? "quasi-tree" : "quasi-forest") << "; leaf order " << order_string(*order) << " ("
                << mode << ")\n";
    } else {
        s.out() << "not a quasi-forest: no leaf order (" << mode << ")\n";
    }
    return yes ? 0 : 1;
}

int emit_trees(Session& s, const std::vector<LabeledComplex>& trees)
{
    if (s.json()) {
        Json all = Json::array();
        for (const auto& t : trees)
            all.push_back(tree_json(t));
        s.emit(trees.size() == 1 ? all[0] : all);
    } else {
        for (std::size_t i = 0; i < trees.size(); ++i) {
            if (trees.size() > 1)
                s.out() << (i ? "\n" : "") << "tree " << i + 1 << '\n';
            write_tree_text(s.out(), trees[i]);
        }
    }
    if (!s.opt.dot.empty()) {
        std::string dot;
        for (std::size_t i = 0; i < trees.size(); ++i)
            dot += tree_to_dot(trees[i], trees.size() == 1 ? "tree" : "tree" + std::to_string(i + 1));
        s.write_file(s.opt.dot, dot);
    }
    return 0;
}

int cmd_tree(Session& s, std::ostream& err)
{
    auto d = load_complex(s);
    auto order = leaf_order(d, LeafOrderMode::Exhaustive);
    if (!order) {
        err << "dual complex is not a quasi-forest: no leaf order\n";
        return 1;
    }
    if (s.opt.joint == "all")
        return emit_trees(s, build_trees(d, *order));
    return emit_trees(s, {build_tree(d, order)});
}

int cmd_floystad(Session& s, std::ostream& err)
{
    auto ideal = require_squarefree(load_ideal(s));
    if (!is_quasi_forest(dual_facets(ideal))) {
        err << "projective dimension exceeds 1: no spanning tree resolves the ideal\n";
        return 1;
    }
    return emit_trees(s, {floystad_tree(ideal)});
}

int cmd_resolve(Session& s, std::ostream& err)
{
    auto ideal = require_squarefree(load_ideal(s));
    auto d = dual_facets(ideal);
    auto order = leaf_order(d, LeafOrderMode::Exhaustive);
    if (!order) {
        err << "dual complex is not a quasi-forest: no tree resolution\n";
        return 1;
    }
    auto tree = build_tree(d, order);
    if (!s.opt.dot.empty())
        s.write_file(s.opt.dot, tree_to_dot(tree));
    bool supports = supports_resolution(tree);
    bool minimal = is_minimal_support(tree);
    auto c = homogenize(tree);
    if (s.json()) {
        auto j = free_complex_to_json(c);
        j["supports_resolution"] = supports;
        j["minimal"] = minimal;
        s.emit(j);
    } else {
        write_free_complex_text(s.out(), c);
        s.out() << "supports resolution: " << (supports ? "yes" : "no") << '\n'
                << "minimal: " << (minimal ? "yes" : "no") << '\n';
    }
    return supports && minimal ? 0 : 1;
}

int cmd_taylor(Session& s)
{
    auto c = taylor(load_ideal(s));
    if (s.json())
        s.emit(free_complex_to_json(c));
    else
        write_free_complex_text(s.out(), c);
    return 0;
}

int cmd_betti(Session& s)
{
    auto b = betti(load_ideal(s));
    if (s.json())
        s.emit(betti_to_json(b));
    else
        write_betti_text(s.out(), b);
    return 0;
}

int cmd_pd(Session& s)
{
    auto ideal = load_ideal(s);
    std::size_t value = s.opt.quotient ? pd_quotient(ideal) : pd_ideal(ideal);
    if (s.json())
        s.emit({{s.opt.quotient ? "pd_quotient" : "pd_ideal", value}});
    else
        s.out() << value << '\n';
    return 0;
}

Json reproducer_json(const std::vector<Discrepancy>& found)
{
    Json list = Json::array();
    for (const auto& d : found)
        list.push_back({{"check", d.check}, {"detail", d.detail}, {"complex", complex_to_json(d.complex)}});
    return {{"discrepancies", list}};
}

int cmd_verify(Session& s, std::ostream& err)
{
    auto ideal = require_squarefree(load_ideal(s));
    auto r = check_equivalence(ideal);
    std::string dual_word = r.connected ? "quasi-tree" : "quasi-forest";
    if (s.json()) {
        s.emit({{"pd_ideal", r.pd},
                {"quasi_forest", r.quasi_forest()},
                {"connected", r.connected},
                {"leaf_order", r.leaf_order ? order_json(*r.leaf_order) : Json(nullptr)},
                {"tree_supports_minimal_resolution", r.tree_supports_minimal},
                {"brute_force_tree", r.brute_force ? Json(*r.brute_force) : Json(nullptr)},
                {"consistent", r.consistent()}});
    } else {
        s.out() << "pd(I)=" << r.pd << "; ";
        if (r.leaf_order)
            s.out() << "dual is " << dual_word << " (leaf order " << order_string(*r.leaf_order) << "); ";
        else
            s.out() << "dual is not a quasi-forest (no leaf order); ";
        if (r.tree)
            s.out() << (r.tree_supports_minimal ? "tree supports minimal resolution"
                                                : "built tree does not support a minimal resolution");
        else
            s.out() << "no tree supports a minimal resolution";
        s.out() << '\n';
    }
    if (!r.consistent()) {
        Discrepancy d{"equivalence", r.dual, "one-sided equivalence for " + ideal.to_string()};
        auto j = reproducer_json({d});
        j["ideal"] = format_ideal(ideal);
        s.write_file(s.opt.reproducer, j.dump(2) + "\n");
        err << "EQUIVALENCE FAILURE: statements disagree; reproducer written to " << s.opt.reproducer << '\n';
        return 1;
    }
    return 0;
}

int cmd_census(Session& s, std::ostream& err)
{
    CensusOptions o;
    o.max_vertices = s.opt.max_vertices;
    o.equivalence_max_vertices = std::min(s.opt.equivalence_max_vertices, s.opt.max_vertices);
    o.up_to_isomorphism = !s.opt.labeled;
    o.workers = s.opt.workers;
    auto rep = s.opt.serial ? run_census_serial(o) : run_census(o);

    const InstanceResult* witness = nullptr;
    for (const auto& r : rep.instances)
        if (r.pd && *r.pd >= 2 && (!witness || *r.pd > *witness->pd))
            witness = &r;

    if (s.json()) {
        Json j{{"complexes", rep.complexes},
               {"complexes_by_vertices", rep.complexes_by_vertices},
               {"quasi_forests", rep.quasi_forests},
               {"quasi_trees", rep.quasi_trees},
               {"simplicial_forests", rep.simplicial_forests},
               {"equivalence_instances", rep.equivalence_instances},
               {"pd_at_most_one", rep.pd_at_most_one},
               {"trees_checked", rep.trees_checked},
               {"discrepancies", rep.discrepancies.size()}};
        if (rep.quasi_forest_not_forest)
            j["quasi_forest_not_forest"] = complex_to_json(*rep.quasi_forest_not_forest);
        s.emit(j);
    } else {
        auto& out = s.out();
        out << "complexes: " << rep.complexes << " (" << (o.up_to_isomorphism ? "up to relabeling" : "labeled")
            << ";";
        for (std::size_t n = 1; n < rep.complexes_by_vertices.size(); ++n)
            out << " n=" << n << ": " << rep.complexes_by_vertices[n];
        out << ")\n"
            << "quasi-forests: " << rep.quasi_forests << '\n'
            << "quasi-trees: " << rep.quasi_trees << '\n'
            << "simplicial forests: " << rep.simplicial_forests << '\n';
        out << "quasi-forest that is not a simplicial forest: "
            << (rep.quasi_forest_not_forest ? rep.quasi_forest_not_forest->to_string() : std::string("none"))
            << '\n';
        out << "equivalence instances: " << rep.equivalence_instances << " (pd(I) <= 1: " << rep.pd_at_most_one
            << ", trees checked: " << rep.trees_checked << ")\n";
        if (witness)
            out << "largest pd(I): " << *witness->pd << " at " << witness->complex.to_string() << " with I = "
                << dual_generators(witness->complex).to_string() << '\n';
        out << "discrepancies: " << rep.discrepancies.size() << '\n';
    }
    if (!rep.discrepancies.empty()) {
        s.write_file(s.opt.reproducer, reproducer_json(rep.discrepancies).dump(2) + "\n");
        for (const auto& d : rep.discrepancies)
            err << "discrepancy [" << d.check << "] " << d.complex.to_string() << ": " << d.detail << '\n';
        err << "reproducer written to " << s.opt.reproducer << '\n';
        return 1;
    }
    return 0;
}

int cmd_polarize(Session& s)
{
    auto p = polarize(load_ideal(s));
    if (s.json())
        s.emit(ideal_to_json(p.ideal));
    else
        s.out() << format_ideal(p.ideal);
    return 0;
}

// Random Taylor and polarization checks.
int cmd_sample(Session& s)
{
    std::mt19937_64 rng(s.opt.seed);
    std::size_t taylor_bad = 0;
    std::size_t polar_bad = 0;
    for (std::size_t k = 0; k < s.opt.count; ++k) {
        auto ideal = random_squarefree_ideal(rng, 6, 5);
        auto totals = betti(ideal).totals();
        bool ok = is_exact_frame(frame(taylor(ideal)));
        std::size_t q = ideal.size();
        std::size_t c = 1;
        for (std::size_t i = 0; i < totals.size(); ++i) {
            ok = ok && totals[i] <= c;
            c = c * (q - i) / (i + 1);
        }
        if (!ok) {
            ++taylor_bad;
            s.out() << "taylor check failed: " << ideal.to_string() << '\n';
        }
        auto general = random_nonsquarefree_ideal(rng, 3, 2, 4);
        if (pd_quotient(general) != pd_quotient(polarize(general).ideal)) {
            ++polar_bad;
            s.out() << "polarization changed pd: " << general.to_string() << '\n';
        }
    }
    if (s.json())
        s.emit({{"seed", s.opt.seed}, {"count", s.opt.count}, {"taylor_failures", taylor_bad},
                {"polarization_failures", polar_bad}});
    else
        s.out() << "seed " << s.opt.seed << ": " << s.opt.count << " samples, " << taylor_bad
                << " Taylor failures, " << polar_bad << " polarization failures\n";
    return taylor_bad + polar_bad == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tree resolutions of monomial ideals of projective dimension at most one", "monores"};
    app.require_subcommand(1, 1);
    Options opt;

    auto add = [&](const std::string& name, const std::string& help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("--input", opt.input, "input file (default stdin)");
        c->add_option("--output", opt.output, "output file (default stdout)");
        c->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        return c;
    };

    add("dual", "ideal -> facets of N(I^v); complex -> generators of N(D^v)");
    add("sr", "ideal -> Stanley-Reisner complex; complex -> Stanley-Reisner ideal");
    add("quasiforest", "leaf order of a complex (or of N(I^v) for an ideal)")
        ->add_option("--recognizer", opt.recognizer, "exhaustive, greedy or induced")
        ->check(CLI::IsMember({"exhaustive", "greedy", "induced"}));
    auto* tree = add("tree", "graph tree along the exhaustive leaf order");
    tree->add_option("--joint", opt.joint, "smallest or all")->check(CLI::IsMember({"smallest", "all"}));
    tree->add_option("--dot", opt.dot, "write the tree(s) as DOT");
    add("floystad", "nested spanning forest tree")->add_option("--dot", opt.dot, "write the tree as DOT");
    add("resolve", "homogenized tree resolution")->add_option("--dot", opt.dot, "write the tree as DOT");
    add("taylor", "Taylor complex");
    add("betti", "multigraded Betti numbers of S/I");
    add("pd", "projective dimension of I")->add_flag("--quotient", opt.quotient, "report pd(S/I) instead");
    add("verify", "three-way equivalence for one ideal")
        ->add_option("--reproducer", opt.reproducer, "where to write a reproducer on failure");
    auto* census = add("census", "check every invariant on all small complexes");
    census->add_option("--max-vertices", opt.max_vertices, "largest vertex count (1-5)")
        ->check(CLI::Range(1, 5));
    census->add_option("--equivalence-max-vertices", opt.equivalence_max_vertices,
                       "largest vertex count for resolution checks");
    census->add_option("--workers", opt.workers, "worker threads (0 = default)")->check(CLI::NonNegativeNumber);
    census->add_flag("--labeled", opt.labeled, "keep every labeling instead of one per relabeling class");
    census->add_flag("--serial", opt.serial, "use the serial reference path");
    census->add_option("--reproducer", opt.reproducer, "where to write discrepancies");
    add("polarize", "squarefree polarization");
    auto* sample = add("sample", "random Taylor-bound and polarization checks");
    sample->add_option("--seed", opt.seed, "random seed");
    sample->add_option("--count", opt.count, "number of samples");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    try {
        Session s(opt, in, out);
        int code = 0;
        if (name == "dual")
            code = cmd_dual(s);
        else if (name == "sr")
            code = cmd_sr(s);
        else if (name == "quasiforest")
            code = cmd_quasiforest(s);
        else if (name == "tree")
            code = cmd_tree(s, err);
        else if (name == "floystad")
            code = cmd_floystad(s, err);
        else if (name == "resolve")
            code = cmd_resolve(s, err);
        else if (name == "taylor")
            code = cmd_taylor(s);
        else if (name == "betti")
            code = cmd_betti(s);
        else if (name == "pd")
            code = cmd_pd(s);
        else if (name == "verify")
            code = cmd_verify(s, err);
        else if (name == "census")
            code = cmd_census(s, err);
        else if (name == "polarize")
            code = cmd_polarize(s);
        else if (name == "sample")
            code = cmd_sample(s);
        s.flush();
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace monores
