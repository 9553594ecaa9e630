#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "necc/bigint.hpp"
#include "necc/convcode.hpp"
#include "necc/network.hpp"

namespace necc {

// Collection of error patterns: subsets of edge indices (1-based) permitted
// to be in error simultaneously. Patterns are kept sorted and deduplicated.
struct ErrorPatternSet {
    std::vector<std::vector<int>> patterns;

    static ErrorPatternSet single_edges(int num_edges);
    static ErrorPatternSet upto_two_edges(int num_edges);  // all unordered pairs
    static ErrorPatternSet from_patterns(std::vector<std::vector<int>> raw, int num_edges);
};

inline constexpr long kDefaultEnumCap = 10'000'000;

// W_Phi: every |E|-length vector supported on some pattern (zero vector
// included via each pattern's all-zero assignment). Empty Phi gives the empty
// union. Deterministic ascending order. Throws EnumerationTooLarge.
std::vector<std::vector<int>> enumerate_error_vectors(const ErrorPatternSet& phi,
                                                      const Field& field, int num_edges,
                                                      long cap = kDefaultEnumCap);

// W_T = { w F_T : w in W_Phi }, deduplicated, ascending.
std::vector<std::vector<int>> sink_error_images(const std::vector<std::vector<int>>& w_phi,
                                                const ScalarMatrix& f_t);

// W_s = union over sinks of { w_T M_T^{-1} }, deduplicated, ascending.
std::vector<std::vector<int>> source_error_set(
    const std::vector<std::vector<std::vector<int>>>& w_t_per_sink,
    const std::vector<ScalarMatrix>& m_t_inv_per_sink);

// t_s: maximum Hamming weight in W_s. Throws EmptySet.
int compute_ts(const std::vector<std::vector<int>>& w_s);

struct SearchParams {
    int delta_max = 4;
    long state_cap = kDefaultStateCap;
    long enum_cap = kDefaultEnumCap;
};

// Exhaustive 1 x n generator search (k = 1 only; throws UnsupportedRank
// otherwise). Enumerates coefficient tuples in lexicographic order (entry 1
// coefficients by ascending power, then entry 2, ...), row degree ascending;
// skips catastrophic generators; among generators of the smallest row degree
// achieving dfree >= 2 t_s + 1 returns the one with minimal T_dfree (first in
// lex order on ties). Throws NoCodeFound past delta_max.
struct SelectedCode {
    PolyMatrix generator;
    CodeMetrics metrics;
};
SelectedCode select_code(const Field& field, int n, int k, int t_s,
                         const SearchParams& params = {});

enum class DecodeMode { CaseA, CaseB };

// Per-sink decoding plan. CaseA decodes the received blocks directly on the
// output-code trellis; CaseB premultiplies each block by M_T^{-1} and decodes
// on the input-code trellis. `spacing` is the guaranteed error separation in
// network uses: T_dfree of the output code for CaseA, of the input code for
// CaseB.
struct SinkPlan {
    std::string sink;
    DecodeMode mode = DecodeMode::CaseB;
    ScalarMatrix m_t_inv;
    std::shared_ptr<const EncoderFSM> trellis;
    int spacing = 0;
    int flush_len = 0;  // nu_max of the input code (transmission protocol)
};

// CaseA iff dfree(C_T) >= 2 max_{w in W_T} w_H(w) + 1 and
// T_dfree(C_s) >= T_dfree(C_T).
DecodeMode choose_mode(const CodeMetrics& input_metrics, const CodeMetrics& output_metrics,
                       int max_wt_weight);

struct ViterbiResult {
    std::vector<std::vector<int>> input;  // full length, flush blocks included
    long weight = 0;                      // Hamming distance of the chosen path
};

// Minimum Hamming distance path from state 0 to state 0 across the received
// blocks. Ties at each merge break toward the smallest predecessor state
// index, then the smallest packed input-block value, so results are
// bit-reproducible.
ViterbiResult viterbi_decode(const EncoderFSM& fsm,
                             const std::vector<std::vector<int>>& received);

// Applies the plan to a flushed received sequence and strips the flush
// blocks: returns the estimated information sequence.
std::vector<std::vector<int>> decode_sink(const SinkPlan& plan,
                                          const std::vector<std::vector<int>>& y);

// ---- Bounds ----

// Generalized Singleton bound (n-k)(floor(delta/k)+1) + delta + 1.
int singleton_bound(int n, int k, int delta);

// Smallest prime power q with n | q-1 and q > max(num_sinks, 2n^2/(n-k)+2).
int min_field_size(int n, int k, int num_sinks);

// T_dfree <= (dfree-1) delta + 1.
long tdfree_bound(int dfree, int delta);

// For an (n,k) MDS code with delta = 2k: T_dfree <= 6nk - 2k^2 + 1.
long tdfree_bound_mds(int n, int k);

// Sufficient field size of the block-code alternative on the J-fold
// time-expanded graph: sum over sinks of C(J |E|, 2t).
BigUint bnecc_field_bound(int j_uses, int num_edges, int t, int num_sinks);

// ---- Construction pipeline (steps 1-6 + decoding plans) ----

struct SinkReport {
    std::string sink;
    std::vector<std::vector<int>> w_t;
    int max_wt_weight = 0;
    PolyMatrix g_out;
    CodeMetrics out_metrics;
    DecodeMode mode = DecodeMode::CaseB;
};

struct ConstructionReport {
    long w_phi_size = 0;
    std::vector<std::vector<int>> w_s;
    int t_s = 0;
    int required_dfree = 0;
    PolyMatrix g_in;
    CodeMetrics in_metrics;
    std::vector<SinkReport> sinks;
};

struct Construction {
    TransferSet transfer;
    ConstructionReport report;
    std::shared_ptr<const EncoderFSM> input_fsm;
    std::vector<SinkPlan> plans;
};

// Full pipeline: transfer matrices, W_Phi, W_T, W_s, t_s, code selection (or
// validation of a supplied code: Catastrophic / InsufficientFreeDistance),
// per-sink output codes and metrics, decode-mode planning.
Construction construct(const NetworkSpec& spec, const ErrorPatternSet& phi,
                       const std::optional<PolyMatrix>& supplied_code = std::nullopt,
                       const SearchParams& params = {});

}  // namespace necc
