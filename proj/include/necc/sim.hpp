#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "necc/nec.hpp"

namespace necc {

struct ScheduleEntry {
    int use = 0;               // network-use index, 0-based
    std::vector<int> w;        // |E|-length error vector
};

// Timed error injections. Entries are sorted by use; consecutive entries are
// at least `spacing` network uses apart (entries sharing a use add up, which
// is how out-of-premise negative controls are expressed with spacing 0).
struct ErrorSchedule {
    std::vector<ScheduleEntry> entries;
    int spacing = 0;
};

// Deterministic given the seed: each entry picks a uniform pattern from phi
// and uniform nonzero values on its edges; entries are placed greedily at
// random gaps >= spacing.
ErrorSchedule make_schedule(const ErrorPatternSet& phi, const Field& field, int num_edges,
                            int num_uses, int spacing, uint64_t seed);

// Checks the schedule invariants against a pattern set: per-entry support in
// some pattern, spacing respected. Throws Error on violation.
void check_schedule(const ErrorSchedule& schedule, const ErrorPatternSet& phi, int num_edges);

struct TrialReport {
    std::vector<std::vector<int>> message;
    struct SinkResult {
        std::string sink;
        std::vector<std::vector<int>> decoded;
        bool success = false;
    };
    std::vector<SinkResult> sinks;
    ErrorSchedule schedule;
    uint64_t seed = 0;
};

// Encodes the message (flushed), pushes every code block through the network
// with the scheduled error vectors, decodes at every sink per its plan, and
// compares. `seed` is recorded verbatim in the report.
TrialReport run_experiment(const Construction& cons, const std::vector<std::vector<int>>& message,
                           const ErrorSchedule& schedule, uint64_t seed = 0);

struct ExhaustiveSummary {
    struct PerSink {
        std::string sink;
        long trials = 0;
        long failures = 0;
    };
    std::vector<PerSink> sinks;
    long total_trials = 0;
    int num_messages = 0;
    int message_len = 0;
    int spacing = 0;
    bool paired = false;
    uint64_t seed = 0;
};

// For num_messages random messages, applies every nonzero error vector of
// W_Phi at every network-use position; with `paired` also every ordered pair
// of vectors at positions >= spacing apart. Failure count per sink must be 0
// within the premise. Throws EnumerationTooLarge past `cap` trials.
ExhaustiveSummary run_exhaustive(const Construction& cons, const ErrorPatternSet& phi,
                                 int num_messages, int message_len, int spacing, bool paired,
                                 uint64_t seed, long cap = kDefaultEnumCap);

}  // namespace necc
