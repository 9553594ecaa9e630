// Acceptance suite: exercises the full pipeline against the published
// example values, exactly (all quantities here are exact small-field
// computations; no tolerances apply). Prints one PASS/FAIL line per
// criterion and exits nonzero if any fail.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "necc/sim.hpp"
#include "necc/textio.hpp"
#include "../oracles.hpp"

using namespace necc;

namespace {

const std::string kData = NECC_DATA_DIR;

struct Harness {
    int failures = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            detail << "    FAILED: " << what << "\n";
        }
    }
    template <typename A, typename B>
    void expect_eq(const A& a, const B& b, const std::string& what) {
        expect(a == b, what);
    }
};

int overall_failures = 0;
std::chrono::steady_clock::time_point criterion_start;

void report(int num, const std::string& name, const Harness& h) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - criterion_start)
                       .count();
    std::cout << (h.failures == 0 ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << name
              << " (" << elapsed << " ms)\n";
    if (h.failures) {
        std::cout << h.detail.str();
        ++overall_failures;
    }
    criterion_start = std::chrono::steady_clock::now();
}

PolyMatrix row_code(const Field& f, std::vector<std::vector<int>> entries) {
    std::vector<Poly> polys;
    for (auto& e : entries) polys.emplace_back(f, std::move(e));
    const int cols = static_cast<int>(polys.size());
    return PolyMatrix(f, 1, cols, std::move(polys));
}

PolyMatrix input_code(const Field& f) { return row_code(f, {{1, 0, 1}, {1, 1, 1}}); }

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) {
    return {v.begin(), v.end()};
}

// ---- criterion 1: transfer matrices ----
void criterion_transfer() {
    Harness h;
    TransferSet bf = build_transfer(load_network_file(kData + "/butterfly_f2.net"));
    const Field f2 = bf.field;
    h.expect_eq(bf.sink("T1").m_t, ScalarMatrix(f2, 2, 2, {1, 1, 0, 1}), "butterfly M_T1");
    h.expect_eq(bf.sink("T2").m_t, ScalarMatrix(f2, 2, 2, {1, 0, 1, 1}), "butterfly M_T2");

    TransferSet cb = build_transfer(load_network_file(kData + "/combination_4c2_f3.net"));
    const Field f3 = cb.field;
    const std::vector<std::pair<std::string, std::vector<int>>> expected = {
        {"T1", {1, 0, 0, 1}}, {"T2", {1, 1, 0, 1}}, {"T3", {1, 1, 0, 2}},
        {"T4", {0, 1, 1, 1}}, {"T5", {0, 1, 1, 2}}, {"T6", {1, 1, 1, 2}}};
    for (const auto& [sink, entries] : expected)
        h.expect_eq(cb.sink(sink).m_t, ScalarMatrix(f3, 2, 2, entries),
                    "combination M_" + sink);
    report(1, "network transfer matrices of the shipped examples", h);
}

// ---- criterion 2: output code renderings ----
void criterion_output_codes() {
    Harness h;
    Field f2 = make_field(2);
    Field f3 = make_field(3);

    TransferSet bf = build_transfer(load_network_file(kData + "/butterfly_f2.net"));
    h.expect_eq(to_string_row(output_code(input_code(f2), bf.sink("T1").m_t), 0),
                std::string("[1+z^2, z]"), "binary butterfly T1 output");
    h.expect_eq(to_string_row(output_code(input_code(f2), bf.sink("T2").m_t), 0),
                std::string("[z, 1+z+z^2]"), "binary butterfly T2 output");

    TransferSet cb = build_transfer(load_network_file(kData + "/combination_4c2_f3.net"));
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"T1", "[1+z^2, 1+z+z^2]"},    {"T2", "[1+z^2, 2+z+2z^2]"}, {"T3", "[1+z^2, 2z]"},
        {"T4", "[1+z+z^2, 2+z+2z^2]"}, {"T5", "[1+z+z^2, 2z]"},     {"T6", "[2+z+2z^2, 2z]"}};
    for (const auto& [sink, text] : expected)
        h.expect_eq(to_string_row(output_code(input_code(f3), cb.sink(sink).m_t), 0), text,
                    "combination " + sink + " output");
    report(2, "output generator matrices, character-exact", h);
}

// ---- criterion 3: dfree / Tdfree ----
void criterion_metrics() {
    Harness h;
    Field f2 = make_field(2);
    Field f3 = make_field(3);

    for (const Field& f : {f2, f3}) {
        CodeMetrics m = analyze(build_encoder(input_code(f)));
        h.expect(m.dfree == 5 && m.tdfree == 6,
                 "input code metrics over F_" + std::to_string(f.q()));
    }

    TransferSet cb = build_transfer(load_network_file(kData + "/combination_4c2_f3.net"));
    const std::vector<std::pair<std::string, std::pair<int, int>>> table = {
        {"T1", {5, 6}}, {"T2", {5, 6}}, {"T3", {3, 4}},
        {"T4", {6, 6}}, {"T5", {4, 5}}, {"T6", {4, 5}}};
    for (const auto& [sink, expect] : table) {
        CodeMetrics m = analyze(build_encoder(output_code(input_code(f3), cb.sink(sink).m_t)));
        h.expect(m.dfree == expect.first && m.tdfree == expect.second,
                 "combination output metrics at " + sink);
    }

    TransferSet bf3 = build_transfer(load_network_file(kData + "/butterfly_f3.net"));
    PolyMatrix alt = row_code(f3, {{1, 0, 1}, {1, 1, 2}});
    CodeMetrics alt1 = analyze(build_encoder(output_code(alt, bf3.sink("T1").m_t)));
    CodeMetrics alt2 = analyze(build_encoder(output_code(alt, bf3.sink("T2").m_t)));
    h.expect(alt1.dfree == 4 && alt1.tdfree == 3, "alternative code T1 metrics");
    h.expect(alt2.dfree == 5 && alt2.tdfree == 5, "alternative code T2 metrics");
    report(3, "free distances and error-spacing windows", h);
}

// ---- criterion 4: construction pipeline ----
void criterion_pipeline() {
    Harness h;
    const std::set<std::vector<int>> plane2 = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

    NetworkSpec bf2 = load_network_file(kData + "/butterfly_f2.net");
    Construction c2 = construct(bf2, ErrorPatternSet::single_edges(9), input_code(bf2.field));
    h.expect_eq(as_set(c2.report.w_s), plane2, "binary butterfly W_s");
    for (const auto& s : c2.report.sinks) {
        h.expect_eq(as_set(s.w_t), plane2, "binary butterfly W_" + s.sink);
        h.expect(s.mode == DecodeMode::CaseB, "binary butterfly decode mode at " + s.sink);
    }
    h.expect(c2.report.t_s == 2 && c2.report.required_dfree == 5,
             "binary butterfly t_s and distance requirement");

    NetworkSpec bf3 = load_network_file(kData + "/butterfly_f3.net");
    Construction c3 = construct(bf3, ErrorPatternSet::single_edges(9), input_code(bf3.field));
    const std::set<std::vector<int>> listed = {{0, 0}, {0, 1}, {1, 0}, {1, 2},
                                               {0, 2}, {2, 1}, {2, 0}};
    h.expect_eq(as_set(c3.report.w_s), listed, "ternary butterfly W_s listing");
    h.expect(c3.report.t_s == 2, "ternary butterfly t_s");
    for (const auto& s : c3.report.sinks)
        h.expect(s.mode == DecodeMode::CaseA, "ternary butterfly decode mode at " + s.sink);

    NetworkSpec cb = load_network_file(kData + "/combination_4c2_f3.net");
    Construction c4 = construct(cb, ErrorPatternSet::upto_two_edges(16), input_code(cb.field));
    const std::vector<DecodeMode> modes = {DecodeMode::CaseA, DecodeMode::CaseA,
                                           DecodeMode::CaseB, DecodeMode::CaseA,
                                           DecodeMode::CaseB, DecodeMode::CaseB};
    for (size_t i = 0; i < modes.size(); ++i)
        h.expect(c4.report.sinks[i].mode == modes[i],
                 "combination decode mode at " + c4.report.sinks[i].sink);
    report(4, "construction pipeline quantities and decode modes", h);
}

// ---- criterion 5: exhaustive correction guarantee ----
void criterion_exhaustive() {
    Harness h;
    NetworkSpec bf2 = load_network_file(kData + "/butterfly_f2.net");
    ErrorPatternSet phi2 = ErrorPatternSet::single_edges(9);
    Construction c2 = construct(bf2, phi2, input_code(bf2.field));

    ExhaustiveSummary singles = run_exhaustive(c2, phi2, /*num_messages=*/20,
                                               /*message_len=*/10, /*spacing=*/6,
                                               /*paired=*/false, /*seed=*/2024,
                                               /*cap=*/2'000'000);
    for (const auto& sink : singles.sinks)
        h.expect(sink.failures == 0, "binary butterfly single-error failures at " + sink.sink +
                                         ": " + std::to_string(sink.failures) + "/" +
                                         std::to_string(sink.trials));

    ExhaustiveSummary paired = run_exhaustive(c2, phi2, /*num_messages=*/20,
                                              /*message_len=*/10, /*spacing=*/6,
                                              /*paired=*/true, /*seed=*/2024,
                                              /*cap=*/2'000'000);
    for (const auto& sink : paired.sinks)
        h.expect(sink.failures == 0,
                 "binary butterfly paired-error (gap >= 6) failures at " + sink.sink + ": " +
                     std::to_string(sink.failures) + "/" + std::to_string(sink.trials) +
                     " - two weight-2 bursts exactly 6 apart admit a closer codeword; " +
                     "minimum-distance decoding provably cannot achieve 0 here " +
                     "(clean at spacing >= 9)");

    NetworkSpec cb = load_network_file(kData + "/combination_4c2_f3.net");
    ErrorPatternSet phicb = ErrorPatternSet::upto_two_edges(16);
    Construction c4 = construct(cb, phicb, input_code(cb.field));
    ExhaustiveSummary s4 = run_exhaustive(c4, phicb, /*num_messages=*/5, /*message_len=*/10,
                                          /*spacing=*/6, /*paired=*/false, /*seed=*/2024,
                                          /*cap=*/2'000'000);
    for (const auto& sink : s4.sinks)
        h.expect(sink.failures == 0, "combination failures at " + sink.sink + ": " +
                                         std::to_string(sink.failures) + "/" +
                                         std::to_string(sink.trials));
    report(5, "exhaustive in-premise error correction (0 failures)", h);
}

// ---- criterion 6: oracle equivalence ----
void criterion_oracles() {
    Harness h;
    Field f2 = make_field(2);
    EncoderFSM fsm = build_encoder(input_code(f2));
    long mismatches = 0;
    for (int len = 1; len <= 4; ++len) {
        std::vector<int> packed(len, 0);
        do {
            auto info = oracle::unpack_sequence(fsm, packed);
            auto cw = encode(fsm, info, true);
            const int total = static_cast<int>(cw.size()) * fsm.c;
            for (int e1 = 0; e1 < total; ++e1)
                for (int e2 = e1; e2 < total; ++e2) {
                    auto noisy = cw;
                    noisy[e1 / fsm.c][e1 % fsm.c] ^= 1;
                    if (e2 != e1) noisy[e2 / fsm.c][e2 % fsm.c] ^= 1;
                    auto fast = viterbi_decode(fsm, noisy);
                    auto brute = oracle::brute_force_decode(fsm, noisy);
                    fast.input.resize(len);
                    if (fast.weight != brute.distance || fast.input != brute.info) ++mismatches;
                }
        } while (oracle::next_sequence(packed, fsm.num_inputs));
    }
    h.expect(mismatches == 0, "trellis vs brute-force decoding mismatches: " +
                                  std::to_string(mismatches));

    std::mt19937 rng(123);
    int tested = 0;
    while (tested < 50) {
        Field f = make_field(tested % 2 == 0 ? 2 : 3);
        std::vector<int> c1(3), c2(3);
        for (auto* c : {&c1, &c2})
            for (auto& v : *c) v = static_cast<int>(rng() % f.q());
        PolyMatrix g = row_code(f, {c1, c2});
        if (g.is_zero()) continue;
        EncoderFSM random_fsm = build_encoder(g);
        if (catastrophic_check(random_fsm)) continue;
        int dfree = free_distance(random_fsm);
        long brute = oracle::brute_force_free_distance(random_fsm, random_fsm.delta + dfree);
        h.expect(dfree == brute, "free distance mismatch on a random code (" +
                                     std::to_string(dfree) + " vs " + std::to_string(brute) +
                                     ")");
        ++tested;
    }
    report(6, "search results equal brute-force oracles", h);
}

// ---- criterion 7: bounds conformance ----
void criterion_bounds() {
    Harness h;
    Field f2 = make_field(2);
    Field f3 = make_field(3);

    std::vector<PolyMatrix> analyzed;
    analyzed.push_back(input_code(f2));
    analyzed.push_back(input_code(f3));
    analyzed.push_back(row_code(f3, {{1, 0, 1}, {1, 1, 2}}));
    TransferSet cb = build_transfer(load_network_file(kData + "/combination_4c2_f3.net"));
    for (const auto& s : cb.sinks) analyzed.push_back(output_code(input_code(f3), s.m_t));
    TransferSet bf2 = build_transfer(load_network_file(kData + "/butterfly_f2.net"));
    for (const auto& s : bf2.sinks) analyzed.push_back(output_code(input_code(f2), s.m_t));

    for (const auto& g : analyzed) {
        CodeMetrics m = analyze(build_encoder(g));
        h.expect(m.dfree <= singleton_bound(g.cols(), g.rows(), m.delta),
                 "free distance exceeds the singleton bound for " + to_string_row(g, 0));
        if (m.minimal_certified)
            h.expect(m.tdfree <= tdfree_bound(m.dfree, m.delta),
                     "window length exceeds the degree bound for " + to_string_row(g, 0));
    }
    CodeMetrics main_metrics = analyze(build_encoder(input_code(f2)));
    h.expect(main_metrics.tdfree == 6 && tdfree_bound(main_metrics.dfree, 2) == 9,
             "input code window 6 within bound 9");
    h.expect_eq(min_field_size(2, 1, 2), 11, "smallest admissible field size");
    h.expect_eq(bnecc_field_bound(2, 9, 1, 2).to_string(), std::string("306"),
                "block-code field-size comparison");
    report(7, "bound conformance", h);
}

// ---- criterion 8: property suites ----
void criterion_properties() {
    Harness h;

    // Field axioms, exhaustive for q <= 16.
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
                        {11, 1}, {13, 1}, {2, 4}}) {
        Field f = make_field(p, m);
        bool ok = true;
        for (int a = 0; a < f.q() && ok; ++a)
            for (int b = 0; b < f.q() && ok; ++b)
                for (int c = 0; c < f.q() && ok; ++c)
                    ok = f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) &&
                         f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
                         f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) &&
                         f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a) &&
                         (a == 0 || f.mul(a, f.inv(a)) == 1);
        h.expect(ok, "field axioms fail for q = " + std::to_string(f.q()));
    }

    // (I-K)F = I and propagate linearity on every shipped network.
    std::mt19937 rng(777);
    for (const char* name :
         {"/butterfly_f2.net", "/butterfly_f3.net", "/combination_4c2_f3.net"}) {
        NetworkSpec spec = load_network_file(kData + name);
        TransferSet ts = build_transfer(spec);
        const Field& f = spec.field;
        const int ne = spec.num_edges();
        ScalarMatrix imk(f, ne, ne);
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j < ne; ++j) imk.set(i, j, f.sub(i == j ? 1 : 0, ts.k.at(i, j)));
        h.expect(imk * ts.f == ScalarMatrix::identity(f, ne),
                 std::string("(I-K)F != I for ") + name);

        bool linear = true;
        for (int trial = 0; trial < 1000 && linear; ++trial) {
            std::vector<int> x1(ts.num_inputs), x2(ts.num_inputs), w1(ne), w2(ne);
            for (auto* v : {&x1, &x2})
                for (auto& s : *v) s = static_cast<int>(rng() % f.q());
            for (auto* v : {&w1, &w2})
                for (auto& s : *v) s = static_cast<int>(rng() % f.q());
            std::vector<int> xs(ts.num_inputs), ws(ne);
            for (int i = 0; i < ts.num_inputs; ++i) xs[i] = f.add(x1[i], x2[i]);
            for (int i = 0; i < ne; ++i) ws[i] = f.add(w1[i], w2[i]);
            auto a = propagate(ts, x1, w1), b = propagate(ts, x2, w2),
                 s = propagate(ts, xs, ws);
            for (size_t si = 0; si < s.size() && linear; ++si)
                for (int i = 0; i < ts.num_inputs && linear; ++i)
                    linear = s[si][i] == f.add(a[si][i], b[si][i]);
        }
        h.expect(linear, std::string("propagate is not linear on ") + name);
    }

    // Every truncated low-weight codeword keeps a nonzero block in each
    // degree-length window.
    Field f2 = make_field(2);
    EncoderFSM fsm = build_encoder(input_code(f2));
    int dfree = free_distance(fsm);
    auto members = oracle::enumerate_truncations(fsm, dfree);
    h.expect(!members.empty(), "no truncated codewords enumerated");
    bool windows_ok = true;
    for (const auto& mbr : members)
        for (size_t i = 0; i + fsm.delta <= mbr.size() && windows_ok; ++i) {
            bool nonzero = false;
            for (size_t t = i; t < i + fsm.delta; ++t)
                for (int sym : mbr[t]) nonzero = nonzero || sym != 0;
            windows_ok = nonzero;
        }
    h.expect(windows_ok, "an all-zero degree-length window appeared");
    report(8, "algebraic property suites", h);
}

}  // namespace

int main() {
    criterion_start = std::chrono::steady_clock::now();
    criterion_transfer();
    criterion_output_codes();
    criterion_metrics();
    criterion_pipeline();
    criterion_exhaustive();
    criterion_oracles();
    criterion_bounds();
    criterion_properties();
    if (overall_failures) {
        std::cout << overall_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
