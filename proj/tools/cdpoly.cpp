// Command-line front end: poly, verify, certify, corpus.

#include "cdpoly/cdpoly.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cdpoly;

struct InputOptions {
    std::string path = "-";
    std::string format = "edgelist";
};

void add_input(CLI::App* cmd, InputOptions& in)
{
    cmd->add_option("input", in.path, "Graph file, '-' for stdin")->required();
    cmd->add_option("--format", in.format, "Input format")->check(CLI::IsMember({"edgelist", "graph6"}));
}

Graph load(const InputOptions& in)
{
    const GraphFormat format = parse_format(in.format);
    if (in.path == "-") return parse_graph(std::cin, format);
    std::ifstream file(in.path);
    if (!file) throw ParseError(0, "cannot open '" + in.path + "'");
    return parse_graph(file, format);
}

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_poly(const InputOptions& in, const std::string& which, bool oracle, bool json)
{
    const Graph g = load(in);
    const bool matching = which == "matching";
    const UniPoly p = matching ? matching_poly(g) : independence_poly(g);
    bool oracle_checked = false;
    if (oracle) {
        const UniPoly q = matching ? matching_poly_oracle(g) : independence_poly_oracle(g);
        if (p != q) {
            std::cerr << "oracle mismatch: engine " << p.to_string() << ", oracle " << q.to_string() << "\n";
            return exit_code::kOracleMismatch;
        }
        oracle_checked = true;
    }
    std::cout << p.to_string() << "\n";
    if (json) {
        Json out = {{"schema", kReportSchema},
                    {"which", matching ? "matching" : "independence"},
                    {"poly", to_json(p)},
                    {"oracle_checked", oracle_checked}};
        std::cout << out.dump(2) << "\n";
    }
    return exit_code::kOk;
}

int cmd_verify(const InputOptions& in, const std::string& identity, const std::vector<int>& anchors,
               const std::string& x_text)
{
    const Graph g = load(in);
    IdentityId id;
    Rational x;
    try {
        id = parse_identity(identity);
        x = parse_rational(x_text);
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
    if (static_cast<int>(anchors.size()) != anchor_arity(id))
        throw BadInput(std::string(to_string(id)) + " takes " + std::to_string(anchor_arity(id)) + " anchor(s), got " +
                       std::to_string(anchors.size()));
    for (int a : anchors)
        if (a < 0 || a >= g.order()) throw BadInput("anchor " + std::to_string(a) + " is not a vertex");
    if (anchors.size() == 2 && anchors[0] == anchors[1]) throw BadInput("anchors must be distinct");

    PolyEngine engine(g);
    IdentityReport report;
    try {
        switch (id) {
        case IdentityId::T1: report = verify_t1(engine, anchors[0], anchors[1]); break;
        case IdentityId::T2: report = verify_t2(engine, anchors[0]); break;
        case IdentityId::T3: report = verify_t3(engine); break;
        case IdentityId::C1a: report = verify_c1a(engine, anchors[0]); break;
        case IdentityId::C1b: report = verify_c1b(engine); break;
        case IdentityId::M1: report = verify_m1(engine, anchors[0], anchors[1]); break;
        case IdentityId::M2: report = verify_m2(engine, anchors[0]); break;
        case IdentityId::MS: report = verify_ms(engine, anchors[0], anchors[1], x); break;
        }
    } catch (const std::invalid_argument& e) {
        // Precondition failures (non-bipartite graph for MS, x <= 0).
        throw BadInput(e.what());
    }
    std::cout << to_json(report).dump(2) << "\n";
    return report.holds ? exit_code::kOk : exit_code::kIdentityFailed;
}

int cmd_certify(const InputOptions& in, bool intervals)
{
    const Graph g = load(in);
    const ClawFreeCertificate c = certify_claw_free(g, true, intervals);
    std::cout << to_json(c).dump(2) << "\n";
    if (!c.claw_free) return exit_code::kNotClawFree;
    return *c.theorem_holds ? exit_code::kOk : exit_code::kNotRealRooted;
}

struct CorpusOptions {
    std::string model = "gnp";
    std::string n = "10";
    std::vector<std::string> p{"1/2"};
    int max_edges = 7;
    std::size_t count = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> filters;
    std::string action = "verify-all";
    std::vector<std::string> identities;
    std::string x = "1";
    unsigned workers = 1;
    std::string out;
    bool timing = false;
};

CorpusSpec build_spec(const CorpusOptions& o)
{
    CorpusSpec spec;
    spec.seed = o.seed;
    spec.count = o.count;
    for (const auto& f : o.filters) {
        if (f == "claw_free") spec.filters.claw_free = true;
        else if (f == "bipartite") spec.filters.bipartite = true;
        else if (f == "connected") spec.filters.connected = true;
        else throw BadInput("unknown filter '" + f + "'");
    }
    auto parse_int = [](const std::string& s) {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    };
    try {
        if (o.model == "gnp" || o.model == "bipartite-gnp") {
            GnpModel m;
            auto colon = o.n.find(':');
            m.n_min = parse_int(o.n.substr(0, colon));
            m.n_max = colon == std::string::npos ? m.n_min : parse_int(o.n.substr(colon + 1));
            m.ps.clear();
            for (const auto& p : o.p) m.ps.push_back(parse_probability(p));
            m.bipartite_sides = o.model == "bipartite-gnp";
            if (spec.count == 0) throw BadInput("random corpus models need --count > 0");
            spec.model = m;
        } else if (o.model == "exhaustive") {
            spec.model = ExhaustiveModel{parse_int(o.n)};
        } else {
            spec.model = LineGraphModel{o.max_edges};
        }
    } catch (const BadInput&) {
        throw;
    } catch (const std::exception& e) {
        throw BadInput(std::string("bad corpus parameters: ") + e.what());
    }
    return spec;
}

int cmd_corpus(const CorpusOptions& o)
{
    const CorpusSpec spec = build_spec(o);
    BatchOptions opt;
    opt.action = o.action == "certify-all" ? CorpusAction::CertifyAll : CorpusAction::VerifyAll;
    try {
        if (!o.identities.empty()) {
            opt.identities.clear();
            for (const auto& s : o.identities) opt.identities.push_back(parse_identity(s));
        }
        opt.ms_x = parse_rational(o.x);
        if (opt.ms_x <= 0) throw std::invalid_argument("--x must be positive");
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
    opt.workers = o.workers;
    opt.timing = o.timing;
    if (!o.out.empty()) opt.out_dir = o.out;

    std::vector<Graph> corpus;
    try {
        corpus = generate_corpus(spec);
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
    const BatchResult result = run_batch(corpus, opt);
    std::cout << result.tsv;
    std::cerr << result.graphs << " graphs, " << result.failures << " failing\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact independence/matching polynomial engine and identity checker"};
    app.require_subcommand(1);

    InputOptions poly_in;
    std::string which = "independence";
    bool oracle = false;
    bool poly_json = false;
    auto* poly = app.add_subcommand("poly", "Print the independence or matching polynomial");
    add_input(poly, poly_in);
    poly->add_option("--which", which, "Polynomial kind")->check(CLI::IsMember({"independence", "matching"}));
    poly->add_flag("--oracle", oracle, "Cross-check against brute-force enumeration");
    poly->add_flag("--json", poly_json, "Also print a JSON object");

    InputOptions verify_in;
    std::string identity;
    std::vector<int> anchors;
    std::string x_text = "1";
    auto* verify = app.add_subcommand("verify", "Check one identity and print its report");
    add_input(verify, verify_in);
    verify->add_option("--identity", identity, "t1, t2, t3, c1a, c1b, m1, m2 or ms")->required();
    verify->add_option("--anchors", anchors, "Anchor vertices u[,v]")->delimiter(',');
    verify->add_option("--x", x_text, "Evaluation point num/den for ms");

    InputOptions certify_in;
    bool intervals = false;
    auto* certify = app.add_subcommand("certify", "Claw-freeness and real-rootedness certificate");
    add_input(certify, certify_in);
    certify->add_flag("--intervals", intervals, "Include rational root-isolating intervals");

    CorpusOptions co;
    auto* corpus = app.add_subcommand("corpus", "Run verify-all or certify-all over a generated corpus");
    corpus->add_option("--model", co.model)->check(CLI::IsMember({"gnp", "bipartite-gnp", "exhaustive", "linegraphs"}));
    corpus->add_option("--n", co.n, "Vertex count, or lo:hi for random models");
    corpus->add_option("--p", co.p, "Edge probabilities num/den")->delimiter(',');
    corpus->add_option("--max-edges", co.max_edges, "Edge bound for linegraphs");
    corpus->add_option("--count", co.count, "Graphs to draw (random) or keep (0 = all)");
    corpus->add_option("--seed", co.seed);
    corpus->add_option("--filter", co.filters, "claw_free, bipartite, connected")->delimiter(',');
    corpus->add_option("--action", co.action)->check(CLI::IsMember({"verify-all", "certify-all"}));
    corpus->add_option("--identities", co.identities)->delimiter(',');
    corpus->add_option("--x", co.x, "Evaluation point for ms");
    corpus->add_option("--workers", co.workers);
    corpus->add_option("--out", co.out, "Directory for summary.tsv and per-graph JSON");
    corpus->add_flag("--timing", co.timing, "Append an elapsed_ms column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code::kBadInput;
    }

    try {
        if (*poly) return cmd_poly(poly_in, which, oracle, poly_json);
        if (*verify) return cmd_verify(verify_in, identity, anchors, x_text);
        if (*certify) return cmd_certify(certify_in, intervals);
        if (*corpus) return cmd_corpus(co);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_code::kBadInput;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::kBadInput;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::kBadInput;
    }
    return exit_code::kBadInput;
}
