#pragma once

// Brute-force reference implementations used by the tests. They deliberately
// share nothing with the library's graph searches: codewords are produced by
// enumerating input sequences through encode(), and minima are taken the slow
// way.

#include <optional>
#include <vector>

#include "necc/convcode.hpp"

namespace necc::oracle {

// All input sequences of `len` blocks as packed base-q block values.
inline bool next_sequence(std::vector<int>& seq, int limit) {
    for (size_t i = 0; i < seq.size(); ++i) {
        if (++seq[i] < limit) return true;
        seq[i] = 0;
    }
    return false;
}

inline std::vector<std::vector<int>> unpack_sequence(const EncoderFSM& fsm,
                                                     const std::vector<int>& packed) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(packed.size());
    for (int u : packed) blocks.push_back(fsm.unpack_input(u));
    return blocks;
}

inline long hamming_distance(const std::vector<std::vector<int>>& a,
                             const std::vector<std::vector<int>>& b) {
    long d = 0;
    for (size_t t = 0; t < a.size(); ++t)
        for (size_t j = 0; j < a[t].size(); ++j) d += a[t][j] != b[t][j];
    return d;
}

// Minimum-distance decoding by enumerating every information sequence of the
// implied length. Ties keep the first sequence in packed ascending order.
struct BruteDecodeResult {
    std::vector<std::vector<int>> info;
    long distance = 0;
    int ties = 0;
};

inline BruteDecodeResult brute_force_decode(const EncoderFSM& fsm,
                                            const std::vector<std::vector<int>>& received) {
    const int info_len = static_cast<int>(received.size()) - fsm.nu_max;
    BruteDecodeResult best;
    best.distance = -1;
    std::vector<int> packed(info_len, 0);
    do {
        auto info = unpack_sequence(fsm, packed);
        auto cw = encode(fsm, info, /*flush=*/true);
        long d = hamming_distance(cw, received);
        if (best.distance < 0 || d < best.distance) {
            best.distance = d;
            best.info = std::move(info);
            best.ties = 1;
        } else if (d == best.distance) {
            ++best.ties;
        }
    } while (next_sequence(packed, fsm.num_inputs));
    return best;
}

// Minimum nonzero flushed-codeword weight over input sequences of up to
// max_len blocks.
inline long brute_force_free_distance(const EncoderFSM& fsm, int max_len) {
    long best = -1;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> packed(len, 0);
        do {
            bool zero = true;
            for (int u : packed) zero = zero && u == 0;
            if (zero) continue;
            auto cw = encode(fsm, unpack_sequence(fsm, packed), /*flush=*/true);
            long w = 0;
            for (const auto& block : cw)
                for (int sym : block) w += sym != 0;
            if (best < 0 || w < best) best = w;
        } while (next_sequence(packed, fsm.num_inputs));
    }
    return best;
}

// Every truncated codeword leaving the zero state, staying on nonzero states,
// of accumulated weight < dfree. Depth-first; non-catastrophic generators
// keep this finite.
inline std::vector<std::vector<std::vector<int>>> enumerate_truncations(const EncoderFSM& fsm,
                                                                        int dfree) {
    std::vector<std::vector<std::vector<int>>> members;
    std::vector<std::vector<int>> path;
    auto dfs = [&](auto&& self, int state, int weight) -> void {
        if (!path.empty()) members.push_back(path);
        for (int ui = 0; ui < fsm.num_inputs; ++ui) {
            int target = fsm.next_state[state * fsm.num_inputs + ui];
            int w = fsm.out_weight[state * fsm.num_inputs + ui];
            if (target == 0 || weight + w >= dfree) continue;
            const int* out = fsm.output_block(state, ui);
            path.emplace_back(out, out + fsm.c);
            self(self, target, weight + w);
            path.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return members;
}

}  // namespace necc::oracle
