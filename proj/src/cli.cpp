#include "neoramsey/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "neoramsey/certificate_io.hpp"
#include "neoramsey/closure.hpp"
#include "neoramsey/exhaustive.hpp"
#include "neoramsey/graph.hpp"
#include "neoramsey/ivab.hpp"
#include "neoramsey/search.hpp"
#include "neoramsey/turan.hpp"
#include "neoramsey/verify.hpp"

namespace neoramsey::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int_token(std::string_view token, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw UsageError(std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

// Comma-separated strictly ascending positive integers. Duplicates and
// non-positive entries are rejected rather than repaired.
std::vector<int> parse_distance_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view token(text.data() + pos,
                               (comma == std::string::npos ? text.size() : comma) - pos);
        int value = parse_int_token(token, "distance");
        if (value < 1) throw UsageError("distances must be positive, got " + std::to_string(value));
        if (!out.empty() && value <= out.back()) {
            throw UsageError("distance list must be strictly ascending");
        }
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "1-2,2-3": undirected edges between 1-based vertex labels.
std::vector<std::pair<int, int>> parse_edge_list(const std::string& text, int p) {
    std::vector<std::pair<int, int>> out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string token =
            text.substr(pos, (comma == std::string::npos ? text.size() : comma) - pos);
        size_t dash = token.find('-');
        if (dash == std::string::npos) {
            throw UsageError("bad edge '" + token + "', expected i-j");
        }
        int i = parse_int_token(std::string_view(token).substr(0, dash), "vertex");
        int j = parse_int_token(std::string_view(token).substr(dash + 1), "vertex");
        if (i < 1 || i > p || j < 1 || j > p) {
            throw UsageError("edge " + token + " outside vertices 1.." + std::to_string(p));
        }
        if (i == j) throw UsageError("self-loop " + token + " is not allowed");
        auto e = std::minmax(i, j);
        if (std::find(out.begin(), out.end(), std::make_pair(e.first, e.second)) != out.end()) {
            throw UsageError("duplicate edge " + token);
        }
        out.emplace_back(e.first, e.second);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string comma_list(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

// Bicolor parts print as A and B, anything else as A1..An.
std::string format_parts(const MultiPartition& partition) {
    if (partition.parts.size() == 2) {
        return "A = " + partition.parts[0].to_string() +
               ", B = " + partition.parts[1].to_string();
    }
    return partition.to_string();
}

void dump_json(const nlohmann::json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

std::string format_elapsed(double seconds) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << seconds << " s";
    return os.str();
}

// ---- search -----------------------------------------------------------

struct SearchArgs {
    int k = 0;
    int l = 0;
    int max_limit = 0;
    bool all_certificates = false;
    int workers = 1;
    bool json = false;
};

SearchOptions to_options(int max_limit, bool all_certificates, int workers) {
    SearchOptions opts;
    if (max_limit > 0) opts.max_limit_cap = max_limit;
    opts.enumerate_all_certificates = all_certificates;
    opts.worker_count = workers;
    return opts;
}

std::string certificate_line(const BiPartition& p) { return p.to_string(); }
std::string certificate_line(const MultiPartition& p) { return format_parts(p); }

template <typename Report>
void print_report_human(const Report& report, const Thresholds& t, std::ostream& out) {
    out << "search, thresholds " << t.to_string() << "\n";
    if (report.status == SearchStatus::cap_exceeded) {
        out << "status              : cap exceeded, legal partitions still alive at limit "
            << report.last_legal_limit << "\n";
    } else {
        out << "neo_ramsey          : " << report.neo_ramsey << "\n";
        out << "last legal limit    : " << report.last_legal_limit << "\n";
        out << "first failing limit : " << report.first_failing_limit << "\n";
    }
    out << "nodes expanded      : " << report.nodes_expanded << "\n";
    out << "elapsed             : " << format_elapsed(report.elapsed_seconds) << "\n";
    out << "certificates at limit " << report.last_legal_limit << " ("
        << report.certificates.size() << "):\n";
    for (const auto& cert : report.certificates) {
        out << "  " << certificate_line(cert) << "\n";
    }
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    if (a.k < 2 || a.l < 2) throw UsageError("thresholds must be >= 2");
    Thresholds t = Thresholds::pair(a.k, a.l);
    SearchReport report =
        search_neo_ramsey(t, to_options(a.max_limit, a.all_certificates, a.workers));
    if (a.json) {
        dump_json(report_to_json(report, t), out);
    } else {
        print_report_human(report, t, out);
    }
    return report.status == SearchStatus::complete ? kExitOk : kExitCapExceeded;
}

struct MulticolorArgs {
    std::vector<int> thresholds;
    int max_limit = 0;
    bool json = false;
};

int cmd_multicolor(const MulticolorArgs& a, std::ostream& out) {
    for (int v : a.thresholds) {
        if (v < 2) throw UsageError("thresholds must be >= 2");
    }
    Thresholds t(a.thresholds);
    MultiSearchReport report = search_generalized(t, to_options(a.max_limit, false, 1));
    if (a.json) {
        dump_json(report_to_json(report, t), out);
    } else {
        print_report_human(report, t, out);
    }
    return report.status == SearchStatus::complete ? kExitOk : kExitCapExceeded;
}

// ---- verify -----------------------------------------------------------

struct VerifyArgs {
    int k = 0;
    int l = 0;
    int p = 0;
    std::string a_list;
    std::string b_list;
    std::string cert_file;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::optional<Certificate> cert;
    if (!a.cert_file.empty()) {
        std::ifstream in(a.cert_file);
        if (!in) throw UsageError("cannot open certificate file '" + a.cert_file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("bad JSON in '" + a.cert_file + "': " + e.what());
        }
        cert = certificate_from_json(j);
    } else {
        if (a.k < 2 || a.l < 2) throw UsageError("thresholds must be >= 2");
        if (a.p < 1) throw UsageError("p must be >= 1");
        cert = Certificate::bicolor(a.k, a.l, a.p, DistanceSet(parse_distance_list(a.a_list)),
                                    DistanceSet(parse_distance_list(a.b_list)));
    }
    Certificate verified = verify_certificate(std::move(*cert));
    if (a.json) {
        dump_json(certificate_to_json(verified), out);
    } else {
        out << "certificate: thresholds " << verified.thresholds.to_string() << ", p = "
            << verified.p << "\n";
        out << "  " << format_parts(verified.partition) << "\n";
        out << "property check : " << (*verified.property_valid ? "ok" : "FAIL") << "\n";
        out << "oracle check   : " << (*verified.oracle_valid ? "ok" : "FAIL") << "\n";
        if (verified.witness) {
            out << "witness        : vertices {" << comma_list(*verified.witness) << "}\n";
        }
        out << "verdict        : " << (verified.both_valid() ? "VALID" : "INVALID") << "\n";
    }
    return verified.both_valid() ? kExitOk : kExitInvalid;
}

// ---- closure ----------------------------------------------------------

int cmd_closure(const std::string& list, bool json, std::ostream& out) {
    DistanceSet u(parse_distance_list(list));
    DistanceSet c = closure(u);
    if (json) {
        nlohmann::json j;
        j["elements"] = u.elements();
        j["closure"] = c.elements();
        j["closed"] = c == u;
        dump_json(j, out);
    } else {
        out << comma_list(c.elements()) << "\n";
    }
    return kExitOk;
}

// ---- graph ------------------------------------------------------------

struct GraphArgs {
    int p = 0;
    std::string a_list;
    bool ivab = false;
    int check_clique = 0;
    int check_indep = 0;
    bool json = false;
};

int cmd_graph(const GraphArgs& a, std::ostream& out) {
    if (a.p < 1) throw UsageError("p must be >= 1");
    DistanceSet dist(parse_distance_list(a.a_list));
    SimpleGraph g = build_distance_graph(a.p, dist);

    std::optional<std::vector<int>> clique;
    std::optional<std::vector<int>> indep;
    if (a.check_clique > 0) clique = find_clique(g, a.check_clique).value_or(std::vector<int>{});
    if (a.check_indep > 0) {
        indep = find_clique(complement(g), a.check_indep).value_or(std::vector<int>{});
    }

    if (a.json) {
        nlohmann::json j;
        j["p"] = a.p;
        j["a"] = dist.elements();
        j["edge_count"] = g.edge_count();
        if (a.p >= 2) {
            DistanceClassification cls = classify_distances(g);
            j["classification"] = {{"all_adjacent", cls.all_adjacent.elements()},
                                   {"all_nonadjacent", cls.all_nonadjacent.elements()},
                                   {"mixed", cls.mixed.elements()}};
        }
        if (a.ivab) j["ivab"] = ivab_to_text(render_ivab(g));
        if (clique) {
            j["clique"] = {{"target", a.check_clique},
                           {"found", !clique->empty()},
                           {"witness", *clique}};
        }
        if (indep) {
            j["independent_set"] = {{"target", a.check_indep},
                                    {"found", !indep->empty()},
                                    {"witness", *indep}};
        }
        dump_json(j, out);
        return kExitOk;
    }

    if (a.ivab) {
        out << ivab_to_text(render_ivab(g));
        return kExitOk;
    }
    out << "graph on " << a.p << " vertices, " << g.edge_count() << " edges, distances "
        << dist.to_string() << "\n";
    if (a.p >= 2) {
        DistanceClassification cls = classify_distances(g);
        out << "all adjacent    : " << cls.all_adjacent.to_string() << "\n";
        out << "all nonadjacent : " << cls.all_nonadjacent.to_string() << "\n";
        out << "mixed           : " << cls.mixed.to_string() << "\n";
    }
    if (clique) {
        out << "clique of " << a.check_clique << ": "
            << (clique->empty() ? "none" : "{" + comma_list(*clique) + "}") << "\n";
    }
    if (indep) {
        out << "independent set of " << a.check_indep << ": "
            << (indep->empty() ? "none" : "{" + comma_list(*indep) + "}") << "\n";
    }
    return kExitOk;
}

// ---- turan ------------------------------------------------------------

struct TuranArgs {
    int p = 0;
    int n = 0;
    bool ivab = false;
    bool json = false;
};

int cmd_turan(const TuranArgs& a, std::ostream& out) {
    if (a.p < 1) throw UsageError("p must be >= 1");
    if (a.n < 2) throw UsageError("n must be >= 2");
    TuranResult result = turan_construct(a.p, a.n);
    bool kn_free = !contains_clique(result.graph, a.n);
    if (a.json) {
        nlohmann::json j;
        j["p"] = result.p;
        j["n"] = result.n;
        j["r"] = result.r;
        j["removed_edges"] = result.removed_edges;
        j["formula_edges"] = result.formula_edges;
        j["construction_edges"] = result.graph.edge_count();
        j["kn_free"] = kn_free;
        if (a.ivab) j["ivab"] = ivab_to_text(render_ivab(result.graph));
        dump_json(j, out);
        return kExitOk;
    }
    if (a.ivab) {
        out << ivab_to_text(render_ivab(result.graph));
        return kExitOk;
    }
    out << "extremal K_" << a.n << "-free graph on " << a.p << " vertices\n";
    out << "r              : " << result.r << "\n";
    out << "removed edges  : " << result.removed_edges << "\n";
    out << "formula edges  : " << result.formula_edges << "\n";
    out << "built edges    : " << result.graph.edge_count() << "\n";
    out << "K_" << a.n << "-free       : " << (kn_free ? "yes" : "NO") << "\n";
    return kExitOk;
}

// ---- exhaustive -------------------------------------------------------

struct ExhaustiveArgs {
    int k = 0;
    int l = 0;
    int n = 0;
    bool json = false;
};

int cmd_exhaustive(const ExhaustiveArgs& a, std::ostream& out) {
    ArrowReport report = exhaustive_ramsey_check(a.k, a.l, a.n);
    if (a.json) {
        nlohmann::json j;
        j["k"] = report.k;
        j["l"] = report.l;
        j["n"] = report.n;
        j["graph_count"] = report.graph_count;
        j["arrow_holds"] = report.arrow_holds;
        j["counterexample_count"] = report.counterexample_count;
        nlohmann::json samples = nlohmann::json::array();
        for (const auto& g : report.sample_counterexamples) {
            nlohmann::json edges = nlohmann::json::array();
            for (int i = 1; i <= g.vertex_count(); ++i) {
                for (int jv = i + 1; jv <= g.vertex_count(); ++jv) {
                    if (g.adjacent(i, jv)) edges.push_back({i, jv});
                }
            }
            samples.push_back(std::move(edges));
        }
        j["sample_counterexamples"] = std::move(samples);
        dump_json(j, out);
    } else {
        out << "checked " << report.graph_count << " labeled graphs on " << report.n
            << " vertices for K_" << report.k << " or I_" << report.l << "\n";
        if (report.arrow_holds) {
            out << "arrow holds: every graph contains one\n";
        } else {
            out << "arrow fails: " << report.counterexample_count
                << " counterexamples, e.g. edge sets of the first "
                << report.sample_counterexamples.size() << " retained\n";
        }
    }
    return report.arrow_holds ? kExitOk : kExitInvalid;
}

// ---- classify ---------------------------------------------------------

struct ClassifyArgs {
    int p = 0;
    std::string edges;
    bool json = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
    if (a.p < 2) throw UsageError("classification needs p >= 2");
    SimpleGraph g(a.p);
    for (auto [i, j] : parse_edge_list(a.edges, a.p)) g.add_edge(i, j);
    DistanceClassification cls = classify_distances(g);
    if (a.json) {
        nlohmann::json j;
        j["p"] = a.p;
        j["all_adjacent"] = cls.all_adjacent.elements();
        j["all_nonadjacent"] = cls.all_nonadjacent.elements();
        j["mixed"] = cls.mixed.elements();
        dump_json(j, out);
    } else {
        out << "all adjacent    : " << cls.all_adjacent.to_string() << "\n";
        out << "all nonadjacent : " << cls.all_nonadjacent.to_string() << "\n";
        out << "mixed           : " << cls.mixed.to_string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"difference-set partition search and verification for Ramsey-style bounds"};
    app.require_subcommand(1);

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "compute R(k, l) by incremental partition search");
    search->add_option("k", search_args.k, "clique threshold for side A")->required();
    search->add_option("l", search_args.l, "independence threshold for side B")->required();
    search->add_option("--max-limit", search_args.max_limit, "stop once this limit is reached")
        ->check(CLI::PositiveNumber);
    search->add_flag("--all-certificates", search_args.all_certificates,
                     "list every legal partition at the last legal limit");
    search->add_option("--workers", search_args.workers, "parallel workers")
        ->check(CLI::PositiveNumber);
    search->add_flag("--json", search_args.json, "machine-readable output");

    MulticolorArgs multi_args;
    auto* multicolor =
        app.add_subcommand("multicolor", "compute the n-color generalization R(m1, ..., mn)");
    multicolor->add_option("thresholds", multi_args.thresholds, "clique threshold per color")
        ->required()
        ->expected(1, 8);
    multicolor
        ->add_option("--max-limit", multi_args.max_limit,
                     "stop once this limit is reached (recommended for 3+ colors)")
        ->check(CLI::PositiveNumber);
    multicolor->add_flag("--json", multi_args.json, "machine-readable output");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a certificate by property and by oracle");
    auto* vk = verify->add_option("--k", verify_args.k, "clique threshold");
    auto* vl = verify->add_option("--l", verify_args.l, "independence threshold");
    auto* vp = verify->add_option("--p", verify_args.p, "vertex count");
    vp->check(CLI::PositiveNumber);
    auto* va = verify->add_option("--a", verify_args.a_list, "adjacent distances, e.g. 1,4");
    auto* vb = verify->add_option("--b", verify_args.b_list, "nonadjacent distances");
    auto* vc = verify->add_option("--cert", verify_args.cert_file, "certificate JSON file");
    vc->excludes(vk)->excludes(vl)->excludes(vp)->excludes(va)->excludes(vb);
    vk->needs(vl)->needs(vp)->needs(va)->needs(vb);
    verify->add_flag("--json", verify_args.json, "machine-readable output");

    std::string closure_list;
    bool closure_json = false;
    auto* closure_cmd = app.add_subcommand("closure", "distances plus their pairwise differences");
    closure_cmd->add_option("distances", closure_list, "comma-separated distances")->required();
    closure_cmd->add_flag("--json", closure_json, "machine-readable output");

    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "build and inspect a distance graph");
    graph->add_option("--p", graph_args.p, "vertex count")->required()->check(CLI::PositiveNumber);
    graph->add_option("--a", graph_args.a_list, "adjacent distances")->required();
    graph->add_flag("--ivab", graph_args.ivab, "print the adjacency bitableau");
    graph->add_option("--check-clique", graph_args.check_clique, "search for a clique of this size")
        ->check(CLI::PositiveNumber);
    graph
        ->add_option("--check-indep", graph_args.check_indep,
                     "search for an independent set of this size")
        ->check(CLI::PositiveNumber);
    graph->add_flag("--json", graph_args.json, "machine-readable output");

    TuranArgs turan_args;
    auto* turan = app.add_subcommand("turan", "extremal K_n-free edge count and construction");
    turan->add_option("--p", turan_args.p, "vertex count")->required()->check(CLI::PositiveNumber);
    turan->add_option("--n", turan_args.n, "forbidden clique size")->required();
    turan->add_flag("--ivab", turan_args.ivab, "print the adjacency bitableau");
    turan->add_flag("--json", turan_args.json, "machine-readable output");

    ExhaustiveArgs ex_args;
    auto* exhaustive =
        app.add_subcommand("exhaustive", "check all labeled graphs on n vertices for K_k or I_l");
    exhaustive->add_option("--k", ex_args.k, "clique size")->required();
    exhaustive->add_option("--l", ex_args.l, "independent set size")->required();
    exhaustive->add_option("--n", ex_args.n, "vertex count (at most 7)")->required();
    exhaustive->add_flag("--json", ex_args.json, "machine-readable output");

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "distance classification of an edge list");
    classify->add_option("--p", classify_args.p, "vertex count")->required()->check(CLI::PositiveNumber);
    classify->add_option("--edges", classify_args.edges, "edge list, e.g. 1-2,2-3");
    classify->add_flag("--json", classify_args.json, "machine-readable output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("neoramsey");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (search->parsed()) return cmd_search(search_args, out);
        if (multicolor->parsed()) return cmd_multicolor(multi_args, out);
        if (verify->parsed()) {
            if (verify_args.cert_file.empty() && verify_args.a_list.empty() &&
                verify_args.p == 0) {
                throw UsageError("verify needs either --cert or --k/--l/--p/--a/--b");
            }
            return cmd_verify(verify_args, out);
        }
        if (closure_cmd->parsed()) return cmd_closure(closure_list, closure_json, out);
        if (graph->parsed()) return cmd_graph(graph_args, out);
        if (turan->parsed()) return cmd_turan(turan_args, out);
        if (exhaustive->parsed()) return cmd_exhaustive(ex_args, out);
        if (classify->parsed()) return cmd_classify(classify_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace neoramsey::cli
