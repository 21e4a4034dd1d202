// Command-line front end: graph analysis, growth-series computation by
// several independent methods, and a cross-method comparison harness.
//
// Exit codes: 0 success/agreement, 1 usage, 2 parse error,
// 3 domain/compatibility error, 4 verification mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <geogrowth/geogrowth.hpp>

using namespace geogrowth;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitMismatch = 4;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitParse, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SimplicialGraph load_graph(const std::string& path) {
    try {
        return parse_graph_file(read_file(path));
    } catch (const GraphParseError& e) {
        throw CliError{kExitParse, path + ": " + e.what()};
    }
}

LinkRegularParams parse_params(const std::string& text) {
    long vals[3];
    char comma1, comma2;
    std::istringstream in(text);
    if (!(in >> vals[0] >> comma1 >> vals[1] >> comma2 >> vals[2]) || comma1 != ',' ||
        comma2 != ',' || !(in >> std::ws).eof())
        throw CliError{kExitUsage, "--params expects 'n,l,q'"};
    LinkRegularParams p{vals[0], vals[1], vals[2]};
    if (p.n < 1 || p.l < 0 || p.l > p.n - 1 || p.q < 0 || (p.l == 0 ? p.q != 0 : p.q > p.l - 1))
        throw CliError{kExitDomain, "parameters out of range: need n>=1, 0<=l<=n-1, 0<=q<=max(l-1,0)"};
    if (!params_realizable(p))
        std::cerr << "warning: (n,l,q)=(" << p.n << "," << p.l << "," << p.q
                  << ") fails the realizability checks (n*l even, n*l*q divisible by 6); "
                     "the formulas are still defined\n";
    return p;
}

// Link-regular tetra-free parameters of a graph, or a domain error.
LinkRegularParams require_regular_params(const SimplicialGraph& g) {
    auto report = check_link_regular(g);
    if (!report.is_link_regular()) {
        const auto& w = *report.witness;
        auto clique_str = [](const Clique& c) {
            std::string s = "{";
            for (std::size_t i = 0; i < c.size(); ++i)
                s += (i ? "," : "") + std::to_string(c[i]);
            return s + "}";
        };
        throw CliError{kExitDomain, "graph is not link-regular: cliques " + clique_str(w.first) +
                                        " and " + clique_str(w.second) + " have link sizes " +
                                        std::to_string(w.first_link_size) + " and " +
                                        std::to_string(w.second_link_size)};
    }
    if (!report.tetra_free)
        throw CliError{kExitDomain, "graph contains a 4-clique; the formulas do not apply"};
    return *report.params;
}

json coeff_strings(const std::vector<Rational>& coeffs) {
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(c.get_str());
    return out;
}

json count_strings(const std::vector<Integer>& counts) {
    json out = json::array();
    for (const auto& c : counts) out.push_back(c.get_str());
    return out;
}

json poly_strings(const Polynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.get_str());
    return out;
}

void emit(const json& report, const std::string& format, const std::string& output_path) {
    std::ostringstream text;
    if (format == "json") {
        text << report.dump(2) << "\n";
    } else {
        // deterministic text rendering of the JSON report
        for (const auto& [key, value] : report.items()) {
            text << key << ": ";
            if (value.is_string())
                text << value.get<std::string>();
            else
                text << value.dump();
            text << "\n";
        }
    }
    if (output_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(output_path);
        if (!out) throw CliError{kExitDomain, "cannot write '" + output_path + "'"};
        out << text.str();
    }
}

struct SeriesOptions {
    std::string graph_path;
    std::string params_text;
    std::string method = "formula";
    std::string group = "racg";
    std::size_t max_len = 12;
    unsigned long long budget = 20'000'000ULL;
};

// One method's coefficients, plus the rational function when there is one.
struct SeriesResult {
    std::vector<Integer> counts;
    std::optional<RationalFunction> fraction;
};

SeriesResult run_method(const SeriesOptions& opt, const std::optional<SimplicialGraph>& graph,
                        const std::optional<LinkRegularParams>& given_params) {
    const bool raag = opt.group == "raag";

    auto fraction_result = [&](const RationalFunction& f) {
        auto coeffs = series_coefficients(f, opt.max_len);
        SeriesResult r;
        for (const auto& c : coeffs) {
            if (c.get_den() != 1)
                throw CliError{kExitDomain, "series has a non-integer coefficient"};
            r.counts.push_back(c.get_num());
        }
        r.fraction = f;
        return r;
    };

    if (opt.method == "formula" || opt.method == "linsys") {
        LinkRegularParams p;
        if (given_params)
            p = *given_params;
        else if (graph)
            p = require_regular_params(*graph);
        else
            throw CliError{kExitUsage, "method '" + opt.method + "' needs --params or --graph"};
        if (opt.method == "formula")
            return fraction_result(raag ? closed_formula_raag(p) : closed_formula_racg(p));
        LinkRegularParams sys_params = raag ? LinkRegularParams{2 * p.n, 2 * p.l, 2 * p.q} : p;
        return fraction_result(build_and_solve_system(sys_params).g);
    }

    if (!graph) throw CliError{kExitUsage, "method '" + opt.method + "' needs --graph"};
    SeriesResult r;
    if (opt.method == "automaton") {
        if (raag)
            throw CliError{kExitDomain,
                           "no signed automaton; use raag-double for the RAAG language"};
        r.counts = automaton_census(build_automaton(*graph), opt.max_len).counts;
    } else if (opt.method == "brute") {
        if (raag) throw CliError{kExitDomain, "use raag-brute for the signed census"};
        r.counts = brute_census(*graph, opt.max_len, GroupKind::RACG, opt.budget).counts;
    } else if (opt.method == "raag-brute") {
        r.counts = brute_census(*graph, opt.max_len, GroupKind::RAAG, opt.budget).counts;
    } else if (opt.method == "raag-double") {
        r.counts = raag_census_via_double(*graph, opt.max_len).counts;
    } else {
        throw CliError{kExitUsage, "unknown method '" + opt.method + "'"};
    }
    return r;
}

int cmd_analyze(const std::string& graph_path, const std::string& format,
                const std::string& output_path) {
    SimplicialGraph g = load_graph(graph_path);
    auto cliques = enumerate_cliques(g);
    long triangles = 0;
    bool tetra_free = true;
    for (const auto& c : cliques) {
        if (c.size() == 3) ++triangles;
        if (c.size() >= 4) tetra_free = false;
    }
    json report;
    report["command"] = "analyze";
    report["input"] = graph_path;
    report["n"] = g.vertex_count();
    report["edges"] = g.edge_count();
    report["triangles"] = triangles;
    report["tetra_free"] = tetra_free;
    auto lr = check_link_regular(g);
    if (lr.is_link_regular()) {
        report["link_regular"] = json::array({lr.params->n, lr.params->l, lr.params->q});
        report["params"] = report["link_regular"];
    } else {
        report["link_regular"] = false;
        const auto& w = *lr.witness;
        report["witness"] = {{"first", w.first},
                             {"first_link_size", w.first_link_size},
                             {"second", w.second},
                             {"second_link_size", w.second_link_size}};
    }
    json fp = json::array();
    Polynomial f_poly = f_polynomial(g);
    for (const auto& c : f_poly.coefficients()) fp.push_back(c.get_num().get_si());
    report["f_poly"] = fp;
    emit(report, format, output_path);
    return 0;
}

int cmd_series(const SeriesOptions& opt, const std::string& format,
               const std::string& output_path) {
    std::optional<SimplicialGraph> graph;
    std::optional<LinkRegularParams> params;
    if (!opt.graph_path.empty()) graph = load_graph(opt.graph_path);
    if (!opt.params_text.empty()) params = parse_params(opt.params_text);
    if (!graph && !params) throw CliError{kExitUsage, "provide --graph or --params"};

    SeriesResult result = run_method(opt, graph, params);
    json report;
    report["command"] = "series";
    report["input"] = opt.graph_path.empty() ? opt.params_text : opt.graph_path;
    report["method"] = opt.method;
    report["group"] = opt.group;
    report["coefficients"] = count_strings(result.counts);
    if (result.fraction) {
        report["numerator"] = poly_strings(result.fraction->num());
        report["denominator"] = poly_strings(result.fraction->den());
    }
    if (params) report["params"] = json::array({params->n, params->l, params->q});
    emit(report, format, output_path);
    return 0;
}

int cmd_compare(const SeriesOptions& opt, const std::string& format,
                const std::string& output_path, std::size_t brute_len, bool corrupt_formula) {
    if (opt.graph_path.empty()) throw CliError{kExitUsage, "compare needs --graph"};
    SimplicialGraph g = load_graph(opt.graph_path);
    const bool raag = opt.group == "raag";

    struct MethodRun {
        std::string name;
        std::vector<Integer> counts;
    };
    std::vector<MethodRun> runs;

    std::optional<LinkRegularParams> regular;
    auto lr = check_link_regular(g);
    if (lr.is_link_regular() && lr.tetra_free) regular = *lr.params;

    auto add_fraction = [&](const std::string& name, RationalFunction f) {
        if (corrupt_formula && name == "formula") {
            // test fixture: perturb the numerator to exercise the mismatch path
            f = f + RationalFunction(Polynomial::monomial(Rational(1), 2));
        }
        auto coeffs = series_coefficients(f, opt.max_len);
        MethodRun run{name, {}};
        for (const auto& c : coeffs) run.counts.push_back(c.get_num());
        runs.push_back(std::move(run));
    };

    if (raag) {
        runs.push_back({"raag-double", raag_census_via_double(g, opt.max_len).counts});
        runs.push_back({"raag-brute",
                        brute_census(g, std::min(opt.max_len, brute_len), GroupKind::RAAG,
                                     opt.budget)
                            .counts});
        if (regular) {
            add_fraction("formula", closed_formula_raag(*regular));
            add_fraction("linsys", build_and_solve_system(
                                       {2 * regular->n, 2 * regular->l, 2 * regular->q})
                                       .g);
        }
    } else {
        runs.push_back({"automaton", automaton_census(build_automaton(g), opt.max_len).counts});
        runs.push_back({"brute",
                        brute_census(g, std::min(opt.max_len, brute_len), GroupKind::RACG,
                                     opt.budget)
                            .counts});
        if (regular) {
            add_fraction("formula", closed_formula_racg(*regular));
            add_fraction("linsys", build_and_solve_system(*regular).g);
        }
    }

    bool agree = true;
    json matrix = json::array();
    for (std::size_t i = 0; i < runs.size(); ++i)
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            std::size_t common = std::min(runs[i].counts.size(), runs[j].counts.size()) - 1;
            json entry;
            entry["methods"] = json::array({runs[i].name, runs[j].name});
            entry["compared_to_length"] = common;
            long first_mismatch = -1;
            for (std::size_t k = 0; k <= common; ++k)
                if (runs[i].counts[k] != runs[j].counts[k]) {
                    first_mismatch = static_cast<long>(k);
                    break;
                }
            entry["agree"] = first_mismatch < 0;
            if (first_mismatch >= 0) {
                entry["first_mismatch"] = first_mismatch;
                agree = false;
            }
            matrix.push_back(entry);
        }

    json report;
    report["command"] = "compare";
    report["input"] = opt.graph_path;
    report["group"] = opt.group;
    json methods = json::array();
    for (const auto& run : runs) {
        methods.push_back({{"method", run.name}, {"coefficients", count_strings(run.counts)}});
    }
    report["methods"] = methods;
    report["agreement"] = matrix;
    report["agree"] = agree;
    if (regular) report["params"] = json::array({regular->n, regular->l, regular->q});
    emit(report, format, output_path);
    return agree ? 0 : kExitMismatch;
}

int cmd_double(const std::string& graph_path, const std::string& output_path) {
    SimplicialGraph g = load_graph(graph_path);
    std::string text = write_graph_file(double_graph(g));
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) throw CliError{kExitDomain, "cannot write '" + output_path + "'"};
        out << text;
    }
    return 0;
}

int cmd_gen(const std::string& family, const std::string& output_path) {
    SimplicialGraph g = [&] {
        try {
            return generate_family(family);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitDomain, e.what()};
        }
    }();
    std::string text = write_graph_file(g);
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) throw CliError{kExitDomain, "cannot write '" + output_path + "'"};
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesic growth series of right-angled Coxeter and Artin groups"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string output_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output_path, "Write the report to a file");

    std::string graph_path;
    SeriesOptions opt;
    std::size_t brute_len = 7;
    bool corrupt_formula = false;
    std::string family;

    auto* analyze = app.add_subcommand("analyze", "Clique and link-regularity report");
    analyze->add_option("--graph", graph_path, "Graph file")->required();

    auto* series = app.add_subcommand("series", "Geodesic growth coefficients by one method");
    series->add_option("--graph", opt.graph_path, "Graph file");
    series->add_option("--params", opt.params_text, "Link-regular parameters n,l,q");
    series->add_option("--method", opt.method, "Computation method")
        ->check(CLI::IsMember({"formula", "linsys", "automaton", "brute", "raag-brute",
                               "raag-double"}));
    series->add_option("--group", opt.group, "Group kind")
        ->check(CLI::IsMember({"racg", "raag"}));
    series->add_option("--max-len", opt.max_len, "Highest length to report");
    series->add_option("--budget", opt.budget, "Brute-force prefix budget");

    auto* compare = app.add_subcommand("compare", "Run every applicable method and cross-check");
    compare->add_option("--graph", opt.graph_path, "Graph file")->required();
    compare->add_option("--group", opt.group, "Group kind")
        ->check(CLI::IsMember({"racg", "raag"}));
    compare->add_option("--max-len", opt.max_len, "Highest length for closed-form methods");
    compare->add_option("--brute-len", brute_len, "Highest length for the brute census");
    compare->add_option("--budget", opt.budget, "Brute-force prefix budget");
    compare->add_flag("--corrupt-formula", corrupt_formula, "Perturb the formula (test fixture)")
        ->group("");

    auto* dbl = app.add_subcommand("double", "Emit the double of a graph");
    dbl->add_option("--graph", graph_path, "Graph file")->required();

    auto* gen = app.add_subcommand("gen", "Emit a named family graph");
    gen->add_option("family", family, "Family spec, e.g. cycle:5 or triangle_double:2")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(graph_path, format, output_path);
        if (series->parsed()) return cmd_series(opt, format, output_path);
        if (compare->parsed())
            return cmd_compare(opt, format, output_path, brute_len, corrupt_formula);
        if (dbl->parsed()) return cmd_double(graph_path, output_path);
        if (gen->parsed()) return cmd_gen(family, output_path);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
