// necc: construct and validate convolutional codes that correct network-edge
// errors on coherent linear multicast networks.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "necc/textio.hpp"

namespace {

struct Options {
    std::string network_file;
    std::string code_file;
    std::string field_token;
    std::string phi_spec = "single-edges";
    std::string format = "table";
    int delta_max = 4;
    bool search = false;
    int spacing = 0;  // 0 = use Tdfree of the input code
    int trials = 20;
    int message_len = 10;
    uint64_t seed = 1;
    bool exhaustive = false;
    bool paired = false;
    int n = 0, k = 0, delta = -1, sinks = 0, dfree = 0;
    std::vector<int> bnecc;  // J, edges, t
};

necc::Construction build_construction(const Options& opt, const necc::NetworkSpec& spec,
                                      const necc::ErrorPatternSet& phi) {
    std::optional<necc::PolyMatrix> code;
    if (!opt.code_file.empty())
        code = necc::load_generator_file(opt.code_file, spec.field);
    else if (!opt.search)
        throw necc::Error("supply --code FILE or --search");
    necc::SearchParams params;
    params.delta_max = opt.delta_max;
    return necc::construct(spec, phi, code, params);
}

int cmd_transfer(const Options& opt) {
    auto ts = necc::build_transfer(necc::load_network_file(opt.network_file));
    std::cout << (opt.format == "json" ? necc::json_transfer(ts) + "\n"
                                       : necc::render_transfer(ts));
    return 0;
}

int cmd_analyze(const Options& opt) {
    necc::Field field = necc::parse_field_token(opt.field_token);
    necc::PolyMatrix g = necc::load_generator_file(opt.code_file, field);
    necc::EncoderFSM fsm = necc::build_encoder(g);
    necc::CodeMetrics m = necc::analyze(fsm);
    std::cout << (opt.format == "json" ? necc::json_code_metrics(g, m) + "\n"
                                       : necc::render_code_metrics(g, m));
    return 0;
}

int cmd_construct(const Options& opt) {
    necc::NetworkSpec spec = necc::load_network_file(opt.network_file);
    necc::ErrorPatternSet phi = necc::resolve_phi(opt.phi_spec, spec.num_edges());
    auto cons = build_construction(opt, spec, phi);
    std::cout << (opt.format == "json" ? necc::json_construction(cons.report) + "\n"
                                       : necc::render_construction(cons.report));
    return 0;
}

int cmd_simulate(const Options& opt) {
    necc::NetworkSpec spec = necc::load_network_file(opt.network_file);
    necc::ErrorPatternSet phi = necc::resolve_phi(opt.phi_spec, spec.num_edges());
    auto cons = build_construction(opt, spec, phi);
    int spacing = opt.spacing > 0 ? opt.spacing : cons.report.in_metrics.tdfree;

    if (opt.exhaustive) {
        auto summary = necc::run_exhaustive(cons, phi, opt.trials, opt.message_len, spacing,
                                            opt.paired, opt.seed);
        std::cout << (opt.format == "json" ? necc::json_summary(summary) + "\n"
                                           : necc::render_summary(summary));
        for (const auto& s : summary.sinks)
            if (s.failures) return 1;
        return 0;
    }

    // Random mode: one random schedule + message per trial.
    necc::ExhaustiveSummary agg;
    agg.num_messages = opt.trials;
    agg.message_len = opt.message_len;
    agg.spacing = spacing;
    agg.seed = opt.seed;
    for (const auto& plan : cons.plans) agg.sinks.push_back({plan.sink, 0, 0});
    const int uses = opt.message_len + cons.input_fsm->nu_max;
    for (int t = 0; t < opt.trials; ++t) {
        uint64_t trial_seed = opt.seed + static_cast<uint64_t>(t);
        auto sched = necc::make_schedule(phi, spec.field, spec.num_edges(), uses, spacing,
                                         trial_seed);
        std::mt19937_64 rng(trial_seed ^ 0x9e3779b97f4a7c15ULL);
        std::vector<std::vector<int>> message(opt.message_len,
                                              std::vector<int>(cons.input_fsm->b, 0));
        for (auto& block : message)
            for (auto& sym : block) sym = static_cast<int>(rng() % spec.field.q());
        auto rep = necc::run_experiment(cons, message, sched, trial_seed);
        ++agg.total_trials;
        for (size_t i = 0; i < rep.sinks.size(); ++i) {
            ++agg.sinks[i].trials;
            if (!rep.sinks[i].success) ++agg.sinks[i].failures;
        }
    }
    std::cout << (opt.format == "json" ? necc::json_summary(agg) + "\n"
                                       : necc::render_summary(agg));
    for (const auto& s : agg.sinks)
        if (s.failures) return 1;
    return 0;
}

int cmd_bounds(const Options& opt) {
    if (opt.k < 1 || opt.k >= opt.n) throw CLI::ValidationError("bounds", "requires 1 <= k < n");
    std::ostringstream out;
    bool json_mode = opt.format == "json";
    nlohmann::json j;
    if (opt.delta >= 0) {
        int sb = necc::singleton_bound(opt.n, opt.k, opt.delta);
        j["singleton_bound"] = sb;
        out << "singleton bound (n=" << opt.n << ", k=" << opt.k << ", delta=" << opt.delta
            << "): dfree <= " << sb << "\n";
    }
    if (opt.sinks > 0) {
        int q = necc::min_field_size(opt.n, opt.k, opt.sinks);
        j["min_field_size"] = q;
        out << "smallest admissible field size (" << opt.sinks << " sinks): q = " << q << "\n";
    }
    if (opt.delta >= 0) {
        int dfree = opt.dfree > 0 ? opt.dfree : necc::singleton_bound(opt.n, opt.k, opt.delta);
        long tb = necc::tdfree_bound(dfree, opt.delta);
        j["tdfree_bound"] = tb;
        out << "Tdfree bound (dfree " << dfree << ", delta " << opt.delta << "): <= " << tb
            << "\n";
    }
    long mds = necc::tdfree_bound_mds(opt.n, opt.k);
    j["tdfree_bound_mds"] = mds;
    out << "Tdfree bound for an MDS code (delta = 2k): <= " << mds << "\n";
    if (opt.bnecc.size() == 3) {
        auto bound = necc::bnecc_field_bound(opt.bnecc[0], opt.bnecc[1], opt.bnecc[2],
                                             opt.sinks > 0 ? opt.sinks : 1);
        j["bnecc_field_bound"] = bound.to_string();
        out << "block-code alternative needs q > " << bound.to_string() << "\n";
    }
    std::cout << (json_mode ? j.dump() + "\n" : out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convolutional network-error correction toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto* transfer = app.add_subcommand("transfer", "derive A, K, F and per-sink F_T, M_T");
    transfer->add_option("network", opt.network_file, "network description file")->required();

    auto* analyze = app.add_subcommand("analyze", "dfree/Tdfree/degree of a generator matrix");
    analyze->add_option("code", opt.code_file, "generator matrix file")->required();
    analyze->add_option("-f,--field", opt.field_token, "field, e.g. 2, 3 or 2^4")->required();

    auto* construct =
        app.add_subcommand("construct", "build the error-correcting code for a pattern set");
    construct->add_option("network", opt.network_file, "network description file")->required();
    construct->add_option("--phi", opt.phi_spec,
                          "single-edges | upto-2-edges | pattern file path");
    construct->add_option("--code", opt.code_file, "validate this generator matrix file");
    construct->add_flag("--search", opt.search, "search for a 1xn generator instead");
    construct->add_option("--delta-max", opt.delta_max, "search degree limit");

    auto* simulate = app.add_subcommand("simulate", "inject scheduled errors and decode");
    simulate->add_option("network", opt.network_file, "network description file")->required();
    simulate->add_option("--phi", opt.phi_spec, "single-edges | upto-2-edges | pattern file");
    simulate->add_option("--code", opt.code_file, "generator matrix file");
    simulate->add_flag("--search", opt.search, "search for the code instead");
    simulate->add_option("--delta-max", opt.delta_max, "search degree limit");
    simulate->add_option("--spacing", opt.spacing,
                         "min gap between errors in network uses (default Tdfree of the code)");
    simulate->add_option("--trials", opt.trials, "number of messages");
    simulate->add_option("--message-len", opt.message_len, "message length in blocks");
    simulate->add_option("--seed", opt.seed, "rng seed");
    simulate->add_flag("--exhaustive", opt.exhaustive,
                       "every error vector at every position instead of random schedules");
    simulate->add_flag("--paired", opt.paired, "exhaustive mode: also all spaced pairs");

    auto* bounds = app.add_subcommand("bounds", "singleton/field-size/Tdfree bounds");
    bounds->add_option("-n", opt.n, "code length (network min-cut)")->required();
    bounds->add_option("-k", opt.k, "code dimension")->required();
    bounds->add_option("-d,--delta", opt.delta, "code degree");
    bounds->add_option("--dfree", opt.dfree,
                       "free distance for the Tdfree bound (default: singleton bound)");
    bounds->add_option("-s,--sinks", opt.sinks, "number of sinks");
    bounds->add_option("--bnecc", opt.bnecc, "J EDGES T: block-code field-size comparison")
        ->expected(3);

    for (auto* sub : {transfer, analyze, construct, simulate, bounds})
        sub->add_option("--format", opt.format, "table | json")
            ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (transfer->parsed()) return cmd_transfer(opt);
        if (analyze->parsed()) return cmd_analyze(opt);
        if (construct->parsed()) return cmd_construct(opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (bounds->parsed()) return cmd_bounds(opt);
    } catch (const necc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.get_name() << "\n";
        return 2;
    } catch (const necc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
