#ifndef CDPOLY_BATCH_HPP
#define CDPOLY_BATCH_HPP

#include "cdpoly/identities.hpp"
#include "cdpoly/io.hpp"
#include "cdpoly/real_roots.hpp"
#include "cdpoly/report_json.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cdpoly {

enum class CorpusAction { VerifyAll, CertifyAll };

/// Process exit codes shared by the CLI and the batch runner.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNotClawFree = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kOracleMismatch = 3;
inline constexpr int kIdentityFailed = 4;
inline constexpr int kNotRealRooted = 5;
}  // namespace exit_code

struct BatchOptions {
    CorpusAction action = CorpusAction::VerifyAll;
    std::vector<IdentityId> identities{IdentityId::T1, IdentityId::T2,  IdentityId::T3, IdentityId::C1a,
                                       IdentityId::C1b, IdentityId::M1, IdentityId::M2};
    Rational ms_x = 1;
    unsigned workers = 1;
    std::optional<std::filesystem::path> out_dir;
    bool timing = false;  // adds an elapsed_ms column; breaks byte-for-byte reproducibility
};

struct BatchResult {
    std::string tsv;
    std::size_t graphs = 0;
    std::size_t failures = 0;
    int exit_code = exit_code::kOk;
};

namespace detail {

struct GraphOutcome {
    std::string row;
    Json detail;
    int code = exit_code::kOk;
};

inline GraphOutcome run_one(std::size_t id, const Graph& g, const BatchOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    GraphOutcome out;
    const std::string g6 = render_graph6(g);
    out.row = std::to_string(id) + "\t" + g6 + "\t" + std::to_string(g.order()) + "\t" + std::to_string(g.size());
    out.detail = {{"schema", kReportSchema}, {"id", id}, {"graph6", g6}, {"n", g.order()}, {"m", g.size()}};

    if (opt.action == CorpusAction::VerifyAll) {
        PolyEngine engine(g);
        Json reports = Json::array();
        for (IdentityId ident : opt.identities) {
            auto results = verify_all_anchors(engine, ident, opt.ms_x);
            std::size_t passed = 0;
            for (const auto& r : results) {
                passed += r.holds ? 1 : 0;
                reports.push_back(to_json(r));
            }
            if (passed != results.size()) out.code = exit_code::kIdentityFailed;
            out.row += "\t" + std::to_string(passed) + "/" + std::to_string(results.size());
        }
        out.detail["reports"] = std::move(reports);
    } else {
        ClawFreeCertificate c = certify_claw_free(g);
        out.row += std::string("\t") + (c.claw_free ? "1" : "0") + "\t" + (c.cert->all_real ? "1" : "0") + "\t" +
                   std::to_string(c.cert->distinct_real_roots) + "\t" + std::to_string(c.cert->degree_squarefree) +
                   "\t" + (c.theorem_holds ? (*c.theorem_holds ? "1" : "0") : "-");
        if (c.theorem_holds && !*c.theorem_holds) out.code = exit_code::kNotRealRooted;
        out.detail["certificate"] = to_json(c);
    }
    out.row += out.code == exit_code::kOk ? "\tpass" : "\tFAIL";

    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.detail["elapsed_ms"] = ms;
    if (opt.timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", ms);
        out.row += std::string("\t") + buf;
    }
    return out;
}

inline std::string header(const BatchOptions& opt)
{
    std::string h = "id\tgraph6\tn\tm";
    if (opt.action == CorpusAction::VerifyAll) {
        for (IdentityId ident : opt.identities) h += "\t" + std::string(to_string(ident));
    } else {
        h += "\tclaw_free\tall_real\tdistinct_real_roots\tdegree_squarefree\ttheorem_holds";
    }
    h += "\tstatus";
    if (opt.timing) h += "\telapsed_ms";
    return h;
}

}  // namespace detail

/// Runs the action over the corpus with `workers` threads. Rows are assembled
/// in corpus order regardless of completion order.
inline BatchResult run_batch(const std::vector<Graph>& corpus, const BatchOptions& opt)
{
    std::vector<detail::GraphOutcome> outcomes(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) outcomes[i] = detail::run_one(i, corpus[i], opt);
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(opt.workers, static_cast<unsigned>(corpus.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    BatchResult result;
    result.graphs = corpus.size();
    result.tsv = detail::header(opt) + "\n";
    for (const auto& o : outcomes) {
        result.tsv += o.row + "\n";
        if (o.code != exit_code::kOk) {
            ++result.failures;
            // A real-rootedness falsification outranks identity failures.
            if (result.exit_code != exit_code::kNotRealRooted) result.exit_code = o.code;
        }
    }

    if (opt.out_dir) {
        std::filesystem::create_directories(*opt.out_dir);
        std::ofstream(*opt.out_dir / "summary.tsv", std::ios::binary) << result.tsv;
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "graph_%06zu.json", i);
            std::ofstream(*opt.out_dir / name, std::ios::binary) << outcomes[i].detail.dump(2) << "\n";
        }
    }
    return result;
}

}  // namespace cdpoly

#endif  // CDPOLY_BATCH_HPP
