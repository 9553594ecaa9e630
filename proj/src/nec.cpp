#include "necc/nec.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace necc {

ErrorPatternSet ErrorPatternSet::single_edges(int num_edges) {
    ErrorPatternSet phi;
    for (int e = 1; e <= num_edges; ++e) phi.patterns.push_back({e});
    return phi;
}

ErrorPatternSet ErrorPatternSet::upto_two_edges(int num_edges) {
    ErrorPatternSet phi;
    for (int i = 1; i <= num_edges; ++i)
        for (int j = i + 1; j <= num_edges; ++j) phi.patterns.push_back({i, j});
    return phi;
}

ErrorPatternSet ErrorPatternSet::from_patterns(std::vector<std::vector<int>> raw, int num_edges) {
    std::set<std::vector<int>> dedup;
    for (auto& rho : raw) {
        if (rho.empty()) throw Error("error pattern must be a nonempty edge set");
        std::sort(rho.begin(), rho.end());
        rho.erase(std::unique(rho.begin(), rho.end()), rho.end());
        for (int e : rho)
            if (e < 1 || e > num_edges)
                throw Error("error pattern references edge " + std::to_string(e) +
                            " outside 1.." + std::to_string(num_edges));
        dedup.insert(std::move(rho));
    }
    ErrorPatternSet phi;
    phi.patterns.assign(dedup.begin(), dedup.end());
    return phi;
}

std::vector<std::vector<int>> enumerate_error_vectors(const ErrorPatternSet& phi,
                                                      const Field& field, int num_edges,
                                                      long cap) {
    const int q = field.q();
    long total = 0;
    for (const auto& rho : phi.patterns) {
        long count = 1;
        for (size_t i = 0; i < rho.size(); ++i) {
            count *= q;
            if (count > cap) throw EnumerationTooLarge("W_Phi enumeration exceeds the cap");
        }
        total += count;
        if (total > cap) throw EnumerationTooLarge("W_Phi enumeration exceeds the cap");
    }
    std::set<std::vector<int>> out;
    for (const auto& rho : phi.patterns) {
        std::vector<int> w(num_edges, 0);
        std::vector<int> digits(rho.size(), 0);
        for (;;) {
            for (size_t i = 0; i < rho.size(); ++i) w[rho[i] - 1] = digits[i];
            out.insert(w);
            size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
        for (int e : rho) w[e - 1] = 0;
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<int>> sink_error_images(const std::vector<std::vector<int>>& w_phi,
                                                const ScalarMatrix& f_t) {
    std::set<std::vector<int>> out;
    for (const auto& w : w_phi) out.insert(mul_row(w, f_t));
    return {out.begin(), out.end()};
}

std::vector<std::vector<int>> source_error_set(
    const std::vector<std::vector<std::vector<int>>>& w_t_per_sink,
    const std::vector<ScalarMatrix>& m_t_inv_per_sink) {
    if (w_t_per_sink.size() != m_t_inv_per_sink.size())
        throw DimensionMismatch("one W_T and one M_T^{-1} per sink required");
    std::set<std::vector<int>> out;
    for (size_t i = 0; i < w_t_per_sink.size(); ++i)
        for (const auto& wt : w_t_per_sink[i]) out.insert(mul_row(wt, m_t_inv_per_sink[i]));
    return {out.begin(), out.end()};
}

int compute_ts(const std::vector<std::vector<int>>& w_s) {
    if (w_s.empty()) throw EmptySet("t_s of an empty source error set");
    int ts = 0;
    for (const auto& w : w_s) ts = std::max(ts, hamming_weight(w));
    return ts;
}

SelectedCode select_code(const Field& field, int n, int k, int t_s, const SearchParams& params) {
    if (k >= n) throw BadRate("code rate requires k < n");
    if (k != 1) throw UnsupportedRank("exhaustive search supports k = 1 only; supply a code");
    const int q = field.q();
    const int target = 2 * t_s + 1;
    for (int delta = 0; delta <= params.delta_max; ++delta) {
        std::optional<SelectedCode> best;
        // Coefficient tuple (entry 1 coeffs ascending, entry 2, ...) counted
        // lexicographically: last coordinate fastest.
        const int ncoef = n * (delta + 1);
        std::vector<int> coef(ncoef, 0);
        for (;;) {
            bool at_degree = false;
            for (int j = 0; j < n && !at_degree; ++j)
                at_degree = coef[j * (delta + 1) + delta] != 0;
            if (at_degree || delta == 0) {
                std::vector<Poly> entries;
                entries.reserve(n);
                for (int j = 0; j < n; ++j)
                    entries.emplace_back(field,
                                         std::vector<int>(coef.begin() + j * (delta + 1),
                                                          coef.begin() + (j + 1) * (delta + 1)));
                PolyMatrix g(field, 1, n, std::move(entries));
                if (!g.is_zero()) {
                    EncoderFSM fsm = build_encoder(g, params.state_cap);
                    if (!catastrophic_check(fsm)) {
                        int dfree = free_distance(fsm);
                        if (dfree >= target) {
                            CodeMetrics m = analyze(fsm);
                            if (!best || m.tdfree < best->metrics.tdfree)
                                best = SelectedCode{std::move(g), std::move(m)};
                        }
                    }
                }
            }
            int pos = ncoef - 1;
            while (pos >= 0 && ++coef[pos] == q) coef[pos--] = 0;
            if (pos < 0) break;
        }
        if (best) return std::move(*best);
    }
    throw NoCodeFound("no 1x" + std::to_string(n) + " generator of row degree <= " +
                      std::to_string(params.delta_max) + " reaches free distance " +
                      std::to_string(target));
}

DecodeMode choose_mode(const CodeMetrics& input_metrics, const CodeMetrics& output_metrics,
                       int max_wt_weight) {
    bool cond_dfree = output_metrics.dfree >= 2 * max_wt_weight + 1;
    bool cond_tdfree = input_metrics.tdfree >= output_metrics.tdfree;
    return (cond_dfree && cond_tdfree) ? DecodeMode::CaseA : DecodeMode::CaseB;
}

ViterbiResult viterbi_decode(const EncoderFSM& fsm,
                             const std::vector<std::vector<int>>& received) {
    if (received.empty()) throw Error("viterbi_decode needs at least one received block");
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    const int ns = fsm.num_states;
    const int ni = fsm.num_inputs;
    const size_t len = received.size();

    std::vector<long> metric(ns, kInf), next_metric(ns, kInf);
    // Backpointers: predecessor state and input index per (segment, state).
    std::vector<int> bp_state(len * ns, -1), bp_input(len * ns, -1);
    metric[0] = 0;

    for (size_t t = 0; t < len; ++t) {
        const auto& r = received[t];
        if (static_cast<int>(r.size()) != fsm.c)
            throw BlockSizeMismatch("received block size must equal c");
        std::fill(next_metric.begin(), next_metric.end(), kInf);
        for (int s = 0; s < ns; ++s) {
            if (metric[s] == kInf) continue;
            for (int ui = 0; ui < ni; ++ui) {
                const int* out = fsm.output_block(s, ui);
                long dist = 0;
                for (int j = 0; j < fsm.c; ++j) dist += out[j] != r[j];
                long cand = metric[s] + dist;
                int target = fsm.next_state[s * ni + ui];
                // Strict < keeps the earliest (s, ui) pair on ties, which is
                // the smallest state index then input value.
                if (cand < next_metric[target]) {
                    next_metric[target] = cand;
                    bp_state[t * ns + target] = s;
                    bp_input[t * ns + target] = ui;
                }
            }
        }
        metric.swap(next_metric);
    }

    int end_state = 0;
    if (metric[0] == kInf) {
        // Unterminated reception (shorter than nu_max); fall back to the best
        // reachable end state.
        long best = kInf;
        for (int s = 0; s < ns; ++s)
            if (metric[s] < best) {
                best = metric[s];
                end_state = s;
            }
    }

    ViterbiResult res;
    res.weight = metric[end_state];
    res.input.resize(len);
    int state = end_state;
    for (size_t t = len; t-- > 0;) {
        int ui = bp_input[t * ns + state];
        res.input[t] = fsm.unpack_input(ui);
        state = bp_state[t * ns + state];
    }
    return res;
}

std::vector<std::vector<int>> decode_sink(const SinkPlan& plan,
                                          const std::vector<std::vector<int>>& y) {
    ViterbiResult r;
    if (plan.mode == DecodeMode::CaseA) {
        r = viterbi_decode(*plan.trellis, y);
    } else {
        std::vector<std::vector<int>> processed;
        processed.reserve(y.size());
        for (const auto& block : y) processed.push_back(mul_row(block, plan.m_t_inv));
        r = viterbi_decode(*plan.trellis, processed);
    }
    if (static_cast<int>(r.input.size()) < plan.flush_len)
        throw Error("received sequence shorter than the flush tail");
    r.input.resize(r.input.size() - plan.flush_len);
    return std::move(r.input);
}

int singleton_bound(int n, int k, int delta) {
    if (k < 1 || k >= n) throw BadRate("bound requires 1 <= k < n");
    if (delta < 0) throw Error("delta must be >= 0");
    return (n - k) * (delta / k + 1) + delta + 1;
}

namespace {

bool is_prime_power(int q) {
    if (q < 2) return false;
    for (int p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;  // q itself prime
}

}  // namespace

int min_field_size(int n, int k, int num_sinks) {
    if (k < 1 || k >= n) throw BadRate("bound requires 1 <= k < n");
    for (int q = 2;; ++q) {
        if ((q - 1) % n != 0) continue;
        // q > 2n^2/(n-k) + 2 as exact rationals: (q-2)(n-k) > 2n^2.
        if (static_cast<long>(q - 2) * (n - k) <= 2L * n * n) continue;
        if (q <= num_sinks) continue;
        if (!is_prime_power(q)) continue;
        return q;
    }
}

long tdfree_bound(int dfree, int delta) {
    if (dfree < 1 || delta < 0) throw Error("tdfree_bound needs dfree >= 1, delta >= 0");
    return static_cast<long>(dfree - 1) * delta + 1;
}

long tdfree_bound_mds(int n, int k) {
    if (k < 1 || k >= n) throw BadRate("bound requires 1 <= k < n");
    return 6L * n * k - 2L * k * k + 1;
}

BigUint bnecc_field_bound(int j_uses, int num_edges, int t, int num_sinks) {
    if (j_uses < 1 || num_edges < 1 || t < 1 || num_sinks < 1)
        throw Error("bnecc_field_bound needs positive arguments");
    BigUint one_sink = binomial(static_cast<long>(j_uses) * num_edges, 2L * t);
    BigUint total(0);
    for (int i = 0; i < num_sinks; ++i) total += one_sink;
    return total;
}

Construction construct(const NetworkSpec& spec, const ErrorPatternSet& phi,
                       const std::optional<PolyMatrix>& supplied_code,
                       const SearchParams& params) {
    TransferSet ts = build_transfer(spec);
    const Field& f = spec.field;
    const int n = spec.num_inputs;

    auto w_phi = enumerate_error_vectors(phi, f, spec.num_edges(), params.enum_cap);

    std::vector<std::vector<std::vector<int>>> w_t_all;
    std::vector<ScalarMatrix> inv_all;
    for (const auto& s : ts.sinks) {
        w_t_all.push_back(sink_error_images(w_phi, s.f_t));
        inv_all.push_back(s.m_t_inv);
    }
    auto w_s = source_error_set(w_t_all, inv_all);
    int ts_val = compute_ts(w_s);
    int required = 2 * ts_val + 1;

    PolyMatrix g_in(f, 1, n);
    CodeMetrics in_metrics;
    if (supplied_code) {
        g_in = *supplied_code;
        if (g_in.field() != f) throw FieldMismatch("supplied code is over a different field");
        if (g_in.cols() != n)
            throw DimensionMismatch("supplied code must have n = " + std::to_string(n) +
                                    " columns");
        if (g_in.rows() >= n) throw BadRate("supplied code must have k < n rows");
        EncoderFSM fsm = build_encoder(g_in, params.state_cap);
        in_metrics = analyze(fsm);
        if (in_metrics.catastrophic)
            throw Catastrophic("supplied generator matrix is catastrophic");
        if (in_metrics.dfree < required)
            throw InsufficientFreeDistance(
                "supplied code has free distance " + std::to_string(in_metrics.dfree) +
                " < required " + std::to_string(required));
    } else {
        SelectedCode sel = select_code(f, n, 1, ts_val, params);
        g_in = std::move(sel.generator);
        in_metrics = std::move(sel.metrics);
    }

    auto input_fsm = std::make_shared<const EncoderFSM>(build_encoder(g_in, params.state_cap));

    ConstructionReport report{static_cast<long>(w_phi.size()),
                              std::move(w_s),
                              ts_val,
                              required,
                              g_in,
                              in_metrics,
                              {}};
    std::vector<SinkPlan> plans;
    for (size_t i = 0; i < ts.sinks.size(); ++i) {
        const SinkTransfer& st = ts.sinks[i];
        int max_wt = 0;
        for (const auto& w : w_t_all[i]) max_wt = std::max(max_wt, hamming_weight(w));
        PolyMatrix g_out = output_code(g_in, st.m_t);
        auto out_fsm =
            std::make_shared<const EncoderFSM>(build_encoder(g_out, params.state_cap));
        CodeMetrics out_metrics = analyze(*out_fsm);
        if (out_metrics.catastrophic)
            throw Catastrophic("output code at sink " + st.sink + " is catastrophic");
        DecodeMode mode = choose_mode(in_metrics, out_metrics, max_wt);
        plans.push_back(SinkPlan{
            st.sink, mode, st.m_t_inv,
            mode == DecodeMode::CaseA ? out_fsm : input_fsm,
            mode == DecodeMode::CaseA ? out_metrics.tdfree : in_metrics.tdfree,
            input_fsm->nu_max});
        report.sinks.push_back(SinkReport{st.sink, std::move(w_t_all[i]), max_wt,
                                          std::move(g_out), std::move(out_metrics), mode});
    }
    return Construction{std::move(ts), std::move(report), input_fsm, std::move(plans)};
}

}  // namespace necc
