// critgraph: command-line front end.
//
// Exit codes: 0 success, 1 check failed or no witness, 2 usage or parse
// error, 3 precondition violated by the input, 4 internal invariant broken.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "critgraph/coloring.hpp"
#include "critgraph/correspondence.hpp"
#include "critgraph/graph_io.hpp"
#include "critgraph/ideal.hpp"

using namespace critgraph;
using nlohmann::json;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, precondition = 3, internal = 4 };

struct InputOptions {
    std::string builtin;
    std::string edge_list;
    std::string graph6;
};

struct OutputOptions {
    bool as_json = false;
    bool timing = false;
};

void add_input_options(CLI::App *cmd, InputOptions &in) {
    auto *b = cmd->add_option("--builtin", in.builtin, "kind:n with kind in cycle, complete, antihole, path, mycielski-cycle");
    auto *e = cmd->add_option("--edge-list", in.edge_list, "edge-list file ('-' for stdin)");
    auto *g = cmd->add_option("--graph6", in.graph6, "graph6 string");
    b->excludes(e)->excludes(g);
    e->excludes(g);
}

std::string slurp(std::istream &in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::pair<Graph, json> read_graph(const InputOptions &in) {
    GraphDocument doc;
    json echo;
    if (!in.builtin.empty()) {
        doc = {in.builtin, GraphFormat::builtin, in.builtin};
        echo = {{"format", "builtin"}, {"source", in.builtin}};
    } else if (!in.graph6.empty()) {
        doc = {"graph6", GraphFormat::graph6, in.graph6};
        echo = {{"format", "graph6"}, {"source", in.graph6}};
    } else if (!in.edge_list.empty() && in.edge_list != "-") {
        std::ifstream file(in.edge_list);
        if (!file) throw ParseError("cannot open '" + in.edge_list + "'");
        doc = {in.edge_list, GraphFormat::edge_list, slurp(file)};
        echo = {{"format", "edge_list"}, {"source", in.edge_list}};
    } else {
        doc = {"stdin", GraphFormat::edge_list, slurp(std::cin)};
        echo = {{"format", "edge_list"}, {"source", "-"}};
    }
    Graph g = load(doc);
    echo["vertices"] = g.size();
    echo["edges"] = g.edge_count();
    return {std::move(g), std::move(echo)};
}

json terms(const IrreducibleIdeal &c) { return c.terms(); }

json component_list(const Decomposition &d) {
    json out = json::array();
    for (const auto &c : d) out.push_back(terms(c));
    return out;
}

json witness_json(const ConjectureWitness &w) {
    return {{"W", w.w},
            {"is_maximal_independent", w.is_maximal_independent},
            {"expanded_chi", w.expanded_chi},
            {"expanded_critical", w.expanded_critical}};
}

int run_invariants(const Graph &g, const std::vector<std::size_t> &bfold, json &inputs, json &results) {
    inputs["bfold"] = bfold;
    auto chi = chromatic_number(g);
    auto crit = is_critical(g);
    results["chi"] = chi.value;
    results["critical"] = crit.critical;
    results["failing_vertices"] = crit.failing_vertices;
    results["clique_number"] = clique_number(g);
    results["independence_number"] = independence_number(g);
    json folds = json::array();
    for (std::size_t b : bfold) folds.push_back({{"b", b}, {"chi_b", b_fold_chromatic(g, b).value}});
    results["chi_b"] = folds;
    if (g.size() > 0) {
        auto f = fractional_chromatic(g);
        results["chi_f"] = f.value.str();
        results["chi_f_achieving_b"] = f.achieving_b;
        results["chi_f_window"] = classify_chi_f_window(g);
        json cert = json::array();
        for (const auto &[set, w] : f.certificate.weights) cert.push_back({{"set", set}, {"weight", w.str()}});
        results["chi_f_certificate"] = cert;
    }
    return Exit::ok;
}

int run_decompose(const Graph &g, std::size_t s, const std::string &engine, json &inputs, json &results) {
    inputs["power"] = s;
    inputs["engine"] = engine;
    auto method = engine == "splitting" ? DecompositionMethod::splitting : DecompositionMethod::incremental;
    Decomposition d = irreducible_decomposition(power(cover_ideal(g), s), method);
    results["component_count"] = d.size();
    results["components"] = component_list(d);
    results["associated_primes"] = associated_primes(d);
    return Exit::ok;
}

int run_correspondence(const Graph &g, std::size_t s, bool converse, json &results) {
    auto r = verify_correspondence(g, s, converse);
    json comps = json::array();
    for (const auto &c : r.components)
        comps.push_back({{"component", terms(c.component)}, {"Y", c.y}, {"chi", c.chi}, {"critical", c.verified_critical}});
    json unmatched = json::array();
    for (const auto &u : r.unmatched) unmatched.push_back({{"exponents", terms(u.exponents)}, {"Y", u.y}});
    results["components"] = comps;
    results["converse_checked"] = r.converse_checked;
    results["candidates_examined"] = r.candidates_examined;
    results["critical_candidates"] = r.critical_candidates;
    results["unmatched"] = unmatched;
    results["mismatches"] = r.mismatches();
    results["passed"] = r.ok();
    return r.ok() ? Exit::ok : Exit::check_failed;
}

int run_persistence(const Graph &g, std::size_t s, json &results) {
    auto r = persistence_check(g, s);
    results["holds"] = r.holds;
    results["missing"] = r.missing;
    results["primes"] = r.primes;
    results["next_primes"] = r.next_primes;
    results["passed"] = r.holds;
    return r.holds ? Exit::ok : Exit::check_failed;
}

int run_technical_lemma(const Graph &g, const VertexSet &w, std::size_t b, json &results) {
    auto r = technical_lemma_check(g, w, b);
    results["holds"] = r.holds;
    results["d"] = r.d;
    results["monomial"] = r.monomial.str();
    results["passed"] = r.holds;
    return r.holds ? Exit::ok : Exit::check_failed;
}

int run_conjecture(const Graph &g, const std::string &mode, json &inputs, json &results) {
    inputs["mode"] = mode;
    auto m = mode == "all-subsets" ? SearchMode::all_subsets : SearchMode::maximal_independent_only;
    auto r = conjecture_search(g, m);
    results["chi"] = chromatic_number(g).value;
    results["found"] = r.found;
    results["exhausted"] = r.exhausted;
    results["candidates_tried"] = r.candidates_tried;
    results["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
    return r.found ? Exit::ok : Exit::check_failed;
}

std::string scalar_text(const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_table(const json &report, std::ostream &out) {
    out << "command: " << report["command"].get<std::string>() << "\n";
    for (const auto &[k, v] : report["inputs"].items()) {
        if (k == "graph") {
            for (const auto &[gk, gv] : v.items()) out << "  graph." << gk << ": " << scalar_text(gv) << "\n";
        } else {
            out << "  " << k << ": " << scalar_text(v) << "\n";
        }
    }
    std::size_t width = 0;
    for (const auto &[k, v] : report["results"].items()) width = std::max(width, k.size());
    for (const auto &[k, v] : report["results"].items()) {
        out << k << std::string(width - k.size() + 2, ' ');
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << v.size() << " entries\n";
            for (const auto &row : v) out << "  " << row.dump() << "\n";
        } else {
            out << scalar_text(v) << "\n";
        }
    }
    if (report.contains("timing_ms"))
        out << "timing_ms" << std::string(std::max<std::size_t>(width, 9) - 7, ' ') << report["timing_ms"] << "\n";
}

// Runs one command; `fn` fills inputs and results and returns the exit code.
int execute(const std::string &command, const InputOptions &in, const OutputOptions &out,
            const std::function<int(const Graph &, json &, json &)> &fn) {
    json report;
    report["command"] = command;
    int code = Exit::ok;
    try {
        auto start = std::chrono::steady_clock::now();
        auto [g, echo] = read_graph(in);
        json inputs{{"graph", echo}}, results = json::object();
        code = fn(g, inputs, results);
        report["inputs"] = inputs;
        report["results"] = results;
        if (out.timing)
            report["timing_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    } catch (const ParseError &e) {
        std::cerr << "critgraph: parse error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const InvariantViolation &e) {
        std::cerr << "critgraph: internal invariant violated: " << e.what() << "\n";
        return Exit::internal;
    } catch (const GraphError &e) {
        std::cerr << "critgraph: " << e.what() << "\n";
        return Exit::precondition;
    } catch (const IdealError &e) {
        std::cerr << "critgraph: " << e.what() << "\n";
        return Exit::precondition;
    } catch (const std::logic_error &e) {
        std::cerr << "critgraph: internal error: " << e.what() << "\n";
        return Exit::internal;
    }
    if (out.as_json)
        std::cout << report.dump(2) << "\n";
    else
        print_table(report, std::cout);
    return code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Critical graphs, graph expansions and cover ideals"};
    app.require_subcommand(1);
    app.fallthrough();
    OutputOptions out;
    app.add_flag("--json", out.as_json, "print a JSON report");
    app.add_flag("--timing", out.timing, "add wall-clock milliseconds to the report");

    InputOptions inv_in, dec_in, ver_in, con_in;
    std::vector<std::size_t> bfold;
    std::size_t dec_power = 1, ver_power = 1, fold = 1;
    std::string engine = "incremental", which, mode = "maximal-independent";
    std::vector<std::size_t> w;
    bool no_converse = false;

    auto *inv = app.add_subcommand("invariants", "chi, criticality, b-fold and fractional chromatic numbers");
    add_input_options(inv, inv_in);
    inv->add_option("--bfold", bfold, "b values for chi_b")->delimiter(',')->check(CLI::PositiveNumber);

    auto *dec = app.add_subcommand("decompose", "irreducible decomposition of J(G)^s");
    add_input_options(dec, dec_in);
    dec->add_option("--power", dec_power, "s")->check(CLI::PositiveNumber);
    dec->add_option("--engine", engine, "decomposition engine")->check(CLI::IsMember({"incremental", "splitting"}));

    auto *ver = app.add_subcommand("verify", "run one of the checks on a graph");
    ver->add_option("check", which, "correspondence, persistence or technical-lemma")
        ->required()
        ->check(CLI::IsMember({"correspondence", "persistence", "technical-lemma"}));
    add_input_options(ver, ver_in);
    ver->add_option("--power", ver_power, "s")->check(CLI::PositiveNumber);
    ver->add_option("--W", w, "expansion set for technical-lemma")->delimiter(',');
    ver->add_option("--b", fold, "fold count for technical-lemma")->check(CLI::PositiveNumber);
    ver->add_flag("--no-converse", no_converse, "skip the converse scan of correspondence");

    auto *con = app.add_subcommand("conjecture", "search for W with G[W] critically (chi+1)-chromatic");
    add_input_options(con, con_in);
    con->add_option("--mode", mode, "candidate space")->check(CLI::IsMember({"maximal-independent", "all-subsets"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    if (inv->parsed())
        return execute("invariants", inv_in, out,
                       [&](const Graph &g, json &i, json &r) { return run_invariants(g, bfold, i, r); });
    if (dec->parsed())
        return execute("decompose", dec_in, out,
                       [&](const Graph &g, json &i, json &r) { return run_decompose(g, dec_power, engine, i, r); });
    if (ver->parsed())
        return execute("verify", ver_in, out, [&](const Graph &g, json &i, json &r) {
            i["check"] = which;
            if (which == "technical-lemma") {
                i["W"] = w;
                i["b"] = fold;
                return run_technical_lemma(g, normalize(g, w), fold, r);
            }
            i["power"] = ver_power;
            if (which == "persistence") return run_persistence(g, ver_power, r);
            i["converse"] = !no_converse;
            return run_correspondence(g, ver_power, !no_converse, r);
        });
    return execute("conjecture", con_in, out,
                   [&](const Graph &g, json &i, json &r) { return run_conjecture(g, mode, i, r); });
}
