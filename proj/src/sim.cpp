#include "necc/sim.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace necc {

namespace {

// Rejection sampling keeps draws uniform and the stream reproducible across
// platforms (std::uniform_int_distribution is not portable).
uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
    if (n == 0) throw Error("bounded draw from an empty range");
    uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

std::vector<std::vector<int>> random_message(std::mt19937_64& rng, const Field& f, int len,
                                             int block) {
    std::vector<std::vector<int>> msg(len, std::vector<int>(block, 0));
    for (auto& b : msg)
        for (auto& sym : b) sym = static_cast<int>(bounded(rng, f.q()));
    return msg;
}

}  // namespace

ErrorSchedule make_schedule(const ErrorPatternSet& phi, const Field& field, int num_edges,
                            int num_uses, int spacing, uint64_t seed) {
    if (spacing < 1) throw Error("schedule spacing must be >= 1");
    ErrorSchedule sched;
    sched.spacing = spacing;
    if (phi.patterns.empty() || num_uses < 1) return sched;
    std::mt19937_64 rng(seed);
    int t = static_cast<int>(bounded(rng, static_cast<uint64_t>(spacing)));
    while (t < num_uses) {
        const auto& rho = phi.patterns[bounded(rng, phi.patterns.size())];
        std::vector<int> w(num_edges, 0);
        for (int e : rho) w[e - 1] = 1 + static_cast<int>(bounded(rng, field.q() - 1));
        sched.entries.push_back({t, std::move(w)});
        t += spacing + static_cast<int>(bounded(rng, static_cast<uint64_t>(spacing) + 1));
    }
    return sched;
}

void check_schedule(const ErrorSchedule& schedule, const ErrorPatternSet& phi, int num_edges) {
    int prev = std::numeric_limits<int>::min();
    for (const auto& entry : schedule.entries) {
        if (entry.use < 0) throw Error("schedule entry at a negative network use");
        if (prev != std::numeric_limits<int>::min() && entry.use - prev < schedule.spacing)
            throw Error("schedule entries closer than the declared spacing");
        prev = entry.use;
        if (static_cast<int>(entry.w.size()) != num_edges)
            throw DimensionMismatch("schedule error vector length must equal |E|");
        if (hamming_weight(entry.w) == 0) continue;
        bool matched = false;
        for (const auto& rho : phi.patterns) {
            bool inside = true;
            for (int e = 1; e <= num_edges && inside; ++e)
                if (entry.w[e - 1] != 0 &&
                    !std::binary_search(rho.begin(), rho.end(), e))
                    inside = false;
            if (inside) {
                matched = true;
                break;
            }
        }
        if (!matched) throw Error("schedule error vector matches no pattern in Phi");
    }
}

TrialReport run_experiment(const Construction& cons, const std::vector<std::vector<int>>& message,
                           const ErrorSchedule& schedule, uint64_t seed) {
    const Field& f = cons.transfer.field;
    const int num_edges = cons.transfer.k.rows();
    auto code_blocks = encode(*cons.input_fsm, message, /*flush=*/true);
    const int uses = static_cast<int>(code_blocks.size());

    // Entries sharing a use add up (out-of-premise controls rely on this).
    std::vector<std::vector<int>> error_at(uses, std::vector<int>(num_edges, 0));
    for (const auto& entry : schedule.entries) {
        if (entry.use < 0 || entry.use >= uses) continue;
        for (int e = 0; e < num_edges; ++e)
            error_at[entry.use][e] = f.add(error_at[entry.use][e], entry.w[e]);
    }

    std::vector<std::vector<std::vector<int>>> received(cons.transfer.sinks.size());
    for (int t = 0; t < uses; ++t) {
        auto per_sink = propagate(cons.transfer, code_blocks[t], error_at[t]);
        for (size_t i = 0; i < per_sink.size(); ++i) received[i].push_back(std::move(per_sink[i]));
    }

    TrialReport report;
    report.message = message;
    report.schedule = schedule;
    report.seed = seed;
    for (size_t i = 0; i < cons.plans.size(); ++i) {
        auto decoded = decode_sink(cons.plans[i], received[i]);
        bool ok = decoded == message;
        report.sinks.push_back({cons.plans[i].sink, std::move(decoded), ok});
    }
    return report;
}

ExhaustiveSummary run_exhaustive(const Construction& cons, const ErrorPatternSet& phi,
                                 int num_messages, int message_len, int spacing, bool paired,
                                 uint64_t seed, long cap) {
    const Field& f = cons.transfer.field;
    const int num_edges = cons.transfer.k.rows();
    auto w_phi = enumerate_error_vectors(phi, f, num_edges, cap);
    std::vector<std::vector<int>> nonzero;
    for (auto& w : w_phi)
        if (hamming_weight(w) != 0) nonzero.push_back(std::move(w));

    const int uses = message_len + cons.input_fsm->nu_max;
    long planned = static_cast<long>(num_messages) * nonzero.size() * uses;
    if (paired) {
        long pair_positions = 0;
        for (int t1 = 0; t1 < uses; ++t1)
            for (int t2 = t1 + spacing; t2 < uses; ++t2) ++pair_positions;
        planned += static_cast<long>(num_messages) * nonzero.size() * nonzero.size() *
                   pair_positions;
    }
    if (planned > cap)
        throw EnumerationTooLarge("exhaustive run of " + std::to_string(planned) +
                                  " trials exceeds the cap");

    ExhaustiveSummary summary;
    summary.num_messages = num_messages;
    summary.message_len = message_len;
    summary.spacing = spacing;
    summary.paired = paired;
    summary.seed = seed;
    for (const auto& plan : cons.plans) summary.sinks.push_back({plan.sink, 0, 0});

    std::mt19937_64 rng(seed);
    const int k = cons.input_fsm->b;
    for (int m = 0; m < num_messages; ++m) {
        auto message = random_message(rng, f, message_len, k);
        auto run_one = [&](const ErrorSchedule& sched) {
            TrialReport rep = run_experiment(cons, message, sched, seed);
            ++summary.total_trials;
            for (size_t i = 0; i < rep.sinks.size(); ++i) {
                ++summary.sinks[i].trials;
                if (!rep.sinks[i].success) ++summary.sinks[i].failures;
            }
        };
        for (const auto& w : nonzero)
            for (int t = 0; t < uses; ++t) {
                ErrorSchedule sched;
                sched.spacing = spacing;
                sched.entries.push_back({t, w});
                run_one(sched);
            }
        if (paired) {
            for (const auto& w1 : nonzero)
                for (const auto& w2 : nonzero)
                    for (int t1 = 0; t1 < uses; ++t1)
                        for (int t2 = t1 + spacing; t2 < uses; ++t2) {
                            ErrorSchedule sched;
                            sched.spacing = spacing;
                            sched.entries.push_back({t1, w1});
                            sched.entries.push_back({t2, w2});
                            run_one(sched);
                        }
        }
    }
    return summary;
}

}  // namespace necc
