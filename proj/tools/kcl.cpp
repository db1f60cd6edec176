#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kcl/bench.hpp"
#include "kcl/gen.hpp"

namespace {

using kcl::CliqueSink;
using kcl::EngineKind;
using kcl::Graph;
using kcl::OrderingKind;
using kcl::Strategy;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagree = 3;

Graph load_input(const std::string& path, double& load_ms) {
    auto t0 = std::chrono::steady_clock::now();
    Graph g = kcl::load_edge_list_file(path);
    load_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return g;
}

void print_clique(std::span<const uint32_t> clique, std::vector<uint32_t>& buf) {
    buf.assign(clique.begin(), clique.end());
    std::sort(buf.begin(), buf.end());
    for (size_t i = 0; i < buf.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << buf[i];
    }
    std::cout << '\n';
}

struct RunArgs {
    std::string input;
    uint32_t k = 3;
    std::string algo = "sdegree";
    std::string ordering;
    std::string strategy = "serial";
    uint32_t workers = 1;
    bool emit = false;
    bool json = false;
    bool no_precore = false;
    bool no_prelist = false;
    uint32_t word_bits = 64;
    uint64_t seed = 0;  // accepted for interface parity; run is deterministic
    std::optional<double> time_limit;
};

int do_run(const RunArgs& a) {
    kcl::RunConfig cfg;
    cfg.k = a.k;
    if (a.algo == "sdegree") {
        cfg.algo = EngineKind::SDegree;
    } else if (a.algo == "bitcol") {
        cfg.algo = EngineKind::BitCol;
    } else if (a.algo == "kclist") {
        cfg.algo = EngineKind::KClist;
    } else if (a.algo == "chiba") {
        cfg.use_chiba = true;
    } else {
        std::cerr << "unknown --algo '" << a.algo
                  << "' (valid: sdegree, bitcol, chiba, kclist)\n";
        return kExitUsage;
    }
    if (!a.ordering.empty()) {
        if (a.algo != "kclist") {
            std::cerr << "--ordering applies to --algo kclist only\n";
            return kExitUsage;
        }
        if (a.ordering == "degree") {
            cfg.kclist_ordering = OrderingKind::Degree;
        } else if (a.ordering == "degeneracy") {
            cfg.kclist_ordering = OrderingKind::Degeneracy;
        } else if (a.ordering == "color") {
            cfg.kclist_ordering = OrderingKind::Color;
        } else {
            std::cerr << "unknown --ordering '" << a.ordering
                      << "' (valid: degree, degeneracy, color)\n";
            return kExitUsage;
        }
    }
    if (a.strategy == "serial") {
        cfg.strategy = Strategy::Serial;
    } else if (a.strategy == "node") {
        cfg.strategy = Strategy::Node;
    } else if (a.strategy == "edge") {
        cfg.strategy = Strategy::Edge;
    } else {
        std::cerr << "unknown --strategy '" << a.strategy
                  << "' (valid: serial, node, edge)\n";
        return kExitUsage;
    }
    if (cfg.use_chiba && cfg.strategy != Strategy::Serial) {
        std::cerr << "chiba is inherently sequential; --strategy " << a.strategy
                  << " is incompatible\n";
        return kExitUsage;
    }
    if (cfg.strategy == Strategy::Edge && a.k < 3) {
        std::cerr << "--strategy edge requires -k >= 3\n";
        return kExitUsage;
    }
    if (a.workers == 0) {
        std::cerr << "--workers must be >= 1\n";
        return kExitUsage;
    }
    if (a.word_bits == 0 || a.word_bits > 64) {
        std::cerr << "--word-bits must be in [1, 64]\n";
        return kExitUsage;
    }
    if (a.k == 0) {
        std::cerr << "-k must be >= 1\n";
        return kExitUsage;
    }
    cfg.workers = a.workers;
    cfg.opts.use_precore = !a.no_precore;
    cfg.opts.use_prelist = !a.no_prelist;
    cfg.opts.word_bits = a.word_bits;
    cfg.time_limit_s = a.time_limit;

    try {
        double load_ms = 0;
        Graph g = load_input(a.input, load_ms);

        std::vector<uint32_t> buf;
        CliqueSink sink = a.emit
                              ? CliqueSink([&](std::span<const uint32_t> c) {
                                    print_clique(c, buf);
                                })
                              : CliqueSink();
        kcl::RunReport rep = kcl::run_benchmark(g, a.input, cfg, sink);
        rep.load_ms = load_ms;
        if (rep.saturated)
            std::cerr << "warning: clique count saturated 64 bits\n";
        // stdout carries at most one machine-readable stream
        if (a.json || a.emit) {
            std::cerr << rep.to_table();
        } else {
            std::cout << rep.to_table();
        }
        if (a.json) std::cout << rep.to_json() << '\n';
        return kExitOk;
    } catch (const kcl::ParseError& e) {
        std::cerr << "parse error at line " << e.line << ": " << e.message << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

struct CrosscheckArgs {
    std::string input;
    uint32_t k = 3;
    bool skip_oracle = false;
    bool inject_fault = false;
};

int do_crosscheck(const CrosscheckArgs& a) {
    try {
        double load_ms = 0;
        Graph g = load_input(a.input, load_ms);

        struct Entry {
            std::string name;
            uint64_t count;
        };
        std::vector<Entry> results;

        auto run_engine = [&](const std::string& name, EngineKind kind,
                              OrderingKind ord) {
            CliqueSink sink;
            kcl::ListingResult r;
            if (kind == EngineKind::KClist) {
                r = kcl::kclist(g, a.k, ord, sink);
            } else if (kind == EngineKind::SDegree) {
                r = kcl::sdegree(g, a.k, sink);
            } else {
                r = kcl::bitcol(g, a.k, sink);
            }
            results.push_back({name, sink.count()});
        };
        run_engine("sdegree", EngineKind::SDegree, OrderingKind::Degree);
        run_engine("bitcol", EngineKind::BitCol, OrderingKind::Degeneracy);
        run_engine("kclist/degree", EngineKind::KClist, OrderingKind::Degree);
        run_engine("kclist/degeneracy", EngineKind::KClist, OrderingKind::Degeneracy);
        run_engine("kclist/color", EngineKind::KClist, OrderingKind::Color);
        {
            CliqueSink sink;
            kcl::chiba_nishizeki(g, a.k, sink);
            results.push_back({"chiba", sink.count()});
        }
        if (!a.skip_oracle) {
            try {
                results.push_back({"brute-force", kcl::brute_force(g, a.k)});
            } catch (const kcl::BruteForceGuardExceeded&) {
                std::cerr << "oracle skipped: instance exceeds brute-force guard\n";
            }
        }
        if (a.inject_fault && !results.empty()) results.front().count += 1;

        bool agree = true;
        for (const auto& e : results) {
            std::cout << e.name << "\t" << e.count << '\n';
            if (e.count != results.front().count) agree = false;
        }
        if (!agree) {
            for (const auto& e : results)
                if (e.count != results.front().count) {
                    std::cerr << "disagreement at k=" << a.k << ": "
                              << results.front().name << "="
                              << results.front().count << " vs " << e.name << "="
                              << e.count << '\n';
                    break;
                }
            return kExitDisagree;
        }
        std::cout << "all engines agree: " << results.front().count << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

struct GenArgs {
    std::string model;
    std::string output;
    uint32_t n = 0;
    double p = 0.1;
    uint32_t clique = 0;
    uint32_t attach = 2;
    uint64_t seed = 0;
};

int do_gen(const GenArgs& a) {
    try {
        Graph g;
        if (a.model == "gnp") {
            g = kcl::gen_gnp(a.n, a.p, a.seed);
        } else if (a.model == "complete") {
            g = kcl::gen_complete(a.n);
        } else if (a.model == "planted-clique") {
            if (a.clique == 0) {
                std::cerr << "planted-clique requires --clique >= 1\n";
                return kExitUsage;
            }
            g = kcl::gen_planted_clique(a.n, a.p, a.clique, a.seed).first;
        } else if (a.model == "barabasi") {
            g = kcl::gen_barabasi(a.n, a.attach, a.seed);
        } else {
            std::cerr << "unknown model '" << a.model
                      << "' (valid: gnp, complete, planted-clique, barabasi)\n";
            return kExitUsage;
        }
        if (a.output.empty()) {
            kcl::write_edge_list(g, std::cout);
        } else {
            std::ofstream out(a.output);
            if (!out) {
                std::cerr << "cannot open " << a.output << " for writing\n";
                return kExitRuntime;
            }
            kcl::write_edge_list(g, out);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-clique listing toolkit"};
    app.require_subcommand(0, 1);

    RunArgs run;
    app.add_option("--input", run.input, "edge-list file");
    app.add_option("-k", run.k, "clique size");
    app.add_option("--algo", run.algo, "sdegree | bitcol | chiba | kclist");
    app.add_option("--ordering", run.ordering,
                   "degree | degeneracy | color (kclist only)");
    app.add_option("--strategy", run.strategy, "serial | node | edge");
    app.add_option("--workers", run.workers, "worker threads");
    app.add_flag("--emit", run.emit, "print each clique (ascending ids)");
    app.add_flag("--json", run.json, "machine-readable report on stdout");
    bool no_precore = false, no_prelist = false;
    app.add_flag("--no-precore", no_precore, "disable the core reduction");
    app.add_flag("--no-prelist", no_prelist, "disable complete-component removal");
    app.add_option("--word-bits", run.word_bits, "bitmap payload bits per word");
    app.add_option("--seed", run.seed, "seed (interface parity; run is deterministic)");
    std::optional<double> time_limit;
    app.add_option("--time-limit", time_limit, "soft wall limit in seconds");

    CrosscheckArgs cc;
    CLI::App* cc_cmd = app.add_subcommand(
        "crosscheck", "run all engines (and oracle) on one input, compare counts");
    cc_cmd->add_option("--input", cc.input, "edge-list file")->required();
    cc_cmd->add_option("-k", cc.k, "clique size");
    cc_cmd->add_flag("--skip-oracle", cc.skip_oracle, "skip brute force");
    cc_cmd->add_flag("--inject-fault", cc.inject_fault)->group("");  // test hook

    GenArgs gen;
    CLI::App* gen_cmd =
        app.add_subcommand("gen", "generate an edge list deterministically");
    gen_cmd->add_option("model", gen.model,
                        "gnp | complete | planted-clique | barabasi")
        ->required();
    gen_cmd->add_option("-n", gen.n, "vertices")->required();
    gen_cmd->add_option("-p", gen.p, "edge probability");
    gen_cmd->add_option("--clique", gen.clique, "planted clique size");
    gen_cmd->add_option("--attach", gen.attach, "attachments per vertex");
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("-o,--output", gen.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cc_cmd->parsed()) return do_crosscheck(cc);
    if (gen_cmd->parsed()) return do_gen(gen);

    if (run.input.empty()) {
        std::cerr << "--input is required\n";
        return kExitUsage;
    }
    run.no_precore = no_precore;
    run.no_prelist = no_prelist;
    run.time_limit = time_limit;
    return do_run(run);
}
