#pragma once

#include <vector>

#include "necc/polymat.hpp"

namespace necc {

// Controller-canonical-form realization of a b x c polynomial generator
// matrix: one shift register of length nu_i per input row. The state index is
// a base-q number whose digits are the concatenated registers, input-1
// register in the least significant digits, newest symbol in the low position
// of each register. Input blocks are likewise packed base-q with input 1 in
// the least significant digit. State 0 with input 0 maps to state 0, output 0.
struct EncoderFSM {
    Field field;
    PolyMatrix generator;
    int b = 0;  // input block size
    int c = 0;  // output block size
    std::vector<int> row_degrees;
    int delta = 0;
    int nu_max = 0;
    int num_states = 0;
    int num_inputs = 0;  // q^b

    std::vector<int> next_state;  // [state * num_inputs + u]
    std::vector<int> outputs;     // [(state * num_inputs + u) * c + j]
    std::vector<int> out_weight;  // [state * num_inputs + u]

    const int* output_block(int state, int u) const {
        return &outputs[(static_cast<size_t>(state) * num_inputs + u) * c];
    }
    int pack_input(const std::vector<int>& block) const;
    std::vector<int> unpack_input(int u) const;
};

inline constexpr int kDefaultStateCap = 1 << 20;

// Throws ZeroGenerator, BadRate (b >= c) or TooManyStates (q^delta > cap).
EncoderFSM build_encoder(const PolyMatrix& g, long state_cap = kDefaultStateCap);

// FSM walk; with flush appends nu_max zero input blocks so the encoder ends
// in the zero state. Equals coefficient-wise u(z) G(z).
std::vector<std::vector<int>> encode(const EncoderFSM& fsm,
                                     const std::vector<std::vector<int>>& u, bool flush);

// True iff the state graph restricted to nonzero states and zero-weight
// output transitions has a cycle, or the zero state has a zero-weight
// self-loop under a nonzero input.
bool catastrophic_check(const EncoderFSM& fsm);

// Minimum Hamming weight over nonzero code sequences, via lowest-weight-first
// search over zero-to-zero state excursions. Throws Catastrophic.
int free_distance(const EncoderFSM& fsm);

// Max number of segments (+1) over truncated codewords of weight < dfree that
// leave the zero state and never return to it. depth_cap <= 0 picks the
// default: (dfree-1)*delta+1 when the generator is certified minimal-basic,
// 10*dfree*(delta+1) otherwise. Throws Catastrophic, DepthCapExceeded.
int t_dfree(const EncoderFSM& fsm, int dfree, long depth_cap = 0);

// For b = 1 only: certified iff gcd of the entries is a nonzero constant.
// Larger b is never certified here.
bool minimal_basic_certified(const PolyMatrix& g);

struct CodeMetrics {
    int dfree = -1;   // -1 when catastrophic
    int tdfree = -1;  // -1 when catastrophic
    int delta = 0;
    std::vector<int> row_degrees;
    bool catastrophic = false;
    bool minimal_certified = false;
};

// Convenience: catastrophic check + dfree + T_dfree in one pass.
CodeMetrics analyze(const EncoderFSM& fsm);

// Output code generator seen at a sink: G_O,T(z) = G_I(z) M_T.
PolyMatrix output_code(const PolyMatrix& g_in, const ScalarMatrix& m_t);

}  // namespace necc
