#include "necc/convcode.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

namespace necc {

namespace {

// Remainder of a by b over F_q[z]; b nonzero.
Poly poly_mod(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    std::vector<int> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.deg();
    int lead_inv = f.inv(bc[db]);
    while (static_cast<int>(r.size()) - 1 >= db) {
        int dr = static_cast<int>(r.size()) - 1;
        int factor = f.mul(r[dr], lead_inv);
        for (int k = 0; k <= db; ++k)
            r[dr - db + k] = f.sub(r[dr - db + k], f.mul(factor, bc[k]));
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Poly(f, std::move(r));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

int EncoderFSM::pack_input(const std::vector<int>& block) const {
    if (static_cast<int>(block.size()) != b)
        throw BlockSizeMismatch("input block must have " + std::to_string(b) + " symbols");
    int u = 0;
    for (int i = b - 1; i >= 0; --i) {
        if (!field.is_element(block[i])) throw BlockSizeMismatch("input symbol outside field");
        u = u * field.q() + block[i];
    }
    return u;
}

std::vector<int> EncoderFSM::unpack_input(int u) const {
    std::vector<int> block(b);
    for (int i = 0; i < b; ++i) {
        block[i] = u % field.q();
        u /= field.q();
    }
    return block;
}

EncoderFSM build_encoder(const PolyMatrix& g, long state_cap) {
    if (g.is_zero()) throw ZeroGenerator("generator matrix is zero");
    if (g.rows() >= g.cols()) throw BadRate("generator must have b < c");
    const Field& f = g.field();
    const int q = f.q();
    EncoderFSM fsm{f, g, g.rows(), g.cols(), g.row_degrees(), 0, 0, 0, 0, {}, {}, {}};
    fsm.delta = g.degree();
    fsm.nu_max = *std::max_element(fsm.row_degrees.begin(), fsm.row_degrees.end());

    long states = 1;
    for (int i = 0; i < fsm.delta; ++i) {
        states *= q;
        if (states > state_cap)
            throw TooManyStates("q^delta exceeds the state cap of " + std::to_string(state_cap));
    }
    long inputs = 1;
    for (int i = 0; i < fsm.b; ++i) inputs *= q;
    if (states * inputs > (1L << 24))
        throw TooManyStates("transition table would exceed 2^24 entries");
    fsm.num_states = static_cast<int>(states);
    fsm.num_inputs = static_cast<int>(inputs);

    const int b = fsm.b, c = fsm.c;
    fsm.next_state.assign(states * inputs, 0);
    fsm.outputs.assign(states * inputs * c, 0);
    fsm.out_weight.assign(states * inputs, 0);

    std::vector<std::vector<int>> reg(b);
    std::vector<int> u(b);
    for (int s = 0; s < fsm.num_states; ++s) {
        int rem = s;
        for (int i = 0; i < b; ++i) {
            reg[i].assign(fsm.row_degrees[i], 0);
            for (int d = 0; d < fsm.row_degrees[i]; ++d) {
                reg[i][d] = rem % q;
                rem /= q;
            }
        }
        for (int ui = 0; ui < fsm.num_inputs; ++ui) {
            int urem = ui;
            for (int i = 0; i < b; ++i) {
                u[i] = urem % q;
                urem /= q;
            }
            // Output: v_j = sum_i sum_d g_ij[d] * u_i[t-d].
            size_t base = (static_cast<size_t>(s) * fsm.num_inputs + ui) * c;
            int weight = 0;
            for (int j = 0; j < c; ++j) {
                int v = 0;
                for (int i = 0; i < b; ++i) {
                    const Poly& gij = g.at(i, j);
                    if (gij.is_zero()) continue;
                    v = f.add(v, f.mul(gij.coeff(0), u[i]));
                    for (int d = 1; d <= gij.deg(); ++d)
                        v = f.add(v, f.mul(gij.coeff(d), reg[i][d - 1]));
                }
                fsm.outputs[base + j] = v;
                if (v != 0) ++weight;
            }
            fsm.out_weight[s * fsm.num_inputs + ui] = weight;
            // Next state: shift u_i into register i.
            int ns = 0, mul = 1;
            for (int i = 0; i < b; ++i) {
                if (fsm.row_degrees[i] > 0) {
                    ns += u[i] * mul;
                    mul *= q;
                    for (int d = 0; d + 1 < fsm.row_degrees[i]; ++d) {
                        ns += reg[i][d] * mul;
                        mul *= q;
                    }
                }
            }
            fsm.next_state[s * fsm.num_inputs + ui] = ns;
        }
    }
    return fsm;
}

std::vector<std::vector<int>> encode(const EncoderFSM& fsm,
                                     const std::vector<std::vector<int>>& u, bool flush) {
    std::vector<std::vector<int>> out;
    out.reserve(u.size() + (flush ? fsm.nu_max : 0));
    int state = 0;
    auto step = [&](int ui) {
        const int* v = fsm.output_block(state, ui);
        out.emplace_back(v, v + fsm.c);
        state = fsm.next_state[state * fsm.num_inputs + ui];
    };
    for (const auto& block : u) step(fsm.pack_input(block));
    if (flush)
        for (int i = 0; i < fsm.nu_max; ++i) step(0);
    return out;
}

bool catastrophic_check(const EncoderFSM& fsm) {
    // Zero-weight nonzero-input self-loop at the zero state.
    for (int ui = 1; ui < fsm.num_inputs; ++ui)
        if (fsm.next_state[ui] == 0 && fsm.out_weight[ui] == 0) return true;

    // Cycle among nonzero states using only zero-weight transitions.
    const int n = fsm.num_states;
    std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<std::pair<int, int>> stack;
    for (int start = 1; start < n; ++start) {
        if (color[start]) continue;
        color[start] = 1;
        stack.push_back({start, 0});
        while (!stack.empty()) {
            int s = stack.back().first;
            int ui = stack.back().second;
            if (ui == fsm.num_inputs) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            stack.back().second = ui + 1;
            if (fsm.out_weight[s * fsm.num_inputs + ui] != 0) continue;
            int t = fsm.next_state[s * fsm.num_inputs + ui];
            if (t == 0) continue;
            if (color[t] == 1) return true;
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    return false;
}

int free_distance(const EncoderFSM& fsm) {
    if (catastrophic_check(fsm)) throw Catastrophic("free distance of a catastrophic generator");
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    std::vector<long> dist(fsm.num_states, kInf);
    using Node = std::pair<long, int>;  // (weight, state)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    long best = kInf;

    // First segment must carry a nonzero input block (excludes the all-zero
    // codeword; a weight-0 return to state 0 would be the catastrophic loop).
    for (int ui = 1; ui < fsm.num_inputs; ++ui) {
        int s = fsm.next_state[ui];
        long w = fsm.out_weight[ui];
        if (s == 0) {
            best = std::min(best, w);
        } else if (w < dist[s]) {
            dist[s] = w;
            pq.push({w, s});
        }
    }
    while (!pq.empty()) {
        auto [w, s] = pq.top();
        pq.pop();
        if (w > dist[s] || w >= best) continue;
        for (int ui = 0; ui < fsm.num_inputs; ++ui) {
            int t = fsm.next_state[s * fsm.num_inputs + ui];
            long w2 = w + fsm.out_weight[s * fsm.num_inputs + ui];
            if (t == 0) {
                best = std::min(best, w2);
            } else if (w2 < dist[t]) {
                dist[t] = w2;
                pq.push({w2, t});
            }
        }
    }
    return static_cast<int>(best);
}

bool minimal_basic_certified(const PolyMatrix& g) {
    if (g.rows() != 1) return false;
    Poly acc(g.field());
    for (int j = 0; j < g.cols(); ++j) {
        if (g.at(0, j).is_zero()) continue;
        acc = acc.is_zero() ? g.at(0, j) : poly_gcd(acc, g.at(0, j));
    }
    return !acc.is_zero() && acc.deg() == 0;
}

int t_dfree(const EncoderFSM& fsm, int dfree, long depth_cap) {
    if (dfree < 1) throw Error("t_dfree requires dfree >= 1");
    if (catastrophic_check(fsm)) throw Catastrophic("T_dfree of a catastrophic generator");
    if (depth_cap <= 0)
        depth_cap = minimal_basic_certified(fsm.generator)
                        ? static_cast<long>(dfree - 1) * fsm.delta + 1
                        : 10L * dfree * (fsm.delta + 1);
    const int n = fsm.num_states;
    if (n == 1) return 1;  // delta = 0: only the empty truncation qualifies

    // Zero-weight transitions between nonzero states form a DAG
    // (non-catastrophic); one topological order serves every weight layer.
    std::vector<int> order;
    {
        std::vector<int> indeg(n, 0);
        for (int s = 1; s < n; ++s)
            for (int ui = 0; ui < fsm.num_inputs; ++ui) {
                int t = fsm.next_state[s * fsm.num_inputs + ui];
                if (t != 0 && fsm.out_weight[s * fsm.num_inputs + ui] == 0) indeg[t]++;
            }
        std::vector<int> queue;
        for (int s = 1; s < n; ++s)
            if (indeg[s] == 0) queue.push_back(s);
        while (!queue.empty()) {
            int s = queue.back();
            queue.pop_back();
            order.push_back(s);
            for (int ui = 0; ui < fsm.num_inputs; ++ui) {
                int t = fsm.next_state[s * fsm.num_inputs + ui];
                if (t != 0 && fsm.out_weight[s * fsm.num_inputs + ui] == 0 && --indeg[t] == 0)
                    queue.push_back(t);
            }
        }
    }

    // depth[w][s] = max segments of a qualifying path ending at s with
    // accumulated weight w; -1 = unreachable.
    std::vector<std::vector<long>> depth(dfree, std::vector<long>(n, -1));
    for (int ui = 0; ui < fsm.num_inputs; ++ui) {
        int s = fsm.next_state[ui];
        int w = fsm.out_weight[ui];
        if (s != 0 && w < dfree) depth[w][s] = std::max(depth[w][s], 1L);
    }
    long max_depth = 0;
    for (int w = 0; w < dfree; ++w) {
        for (int s : order) {
            if (depth[w][s] < 0) continue;
            for (int ui = 0; ui < fsm.num_inputs; ++ui) {
                if (fsm.out_weight[s * fsm.num_inputs + ui] != 0) continue;
                int t = fsm.next_state[s * fsm.num_inputs + ui];
                if (t != 0) depth[w][t] = std::max(depth[w][t], depth[w][s] + 1);
            }
        }
        for (int s = 1; s < n; ++s) {
            if (depth[w][s] < 0) continue;
            if (depth[w][s] > depth_cap)
                throw DepthCapExceeded("T_dfree search exceeded the depth cap of " +
                                       std::to_string(depth_cap));
            max_depth = std::max(max_depth, depth[w][s]);
            for (int ui = 0; ui < fsm.num_inputs; ++ui) {
                int wt = fsm.out_weight[s * fsm.num_inputs + ui];
                if (wt == 0) continue;
                int t = fsm.next_state[s * fsm.num_inputs + ui];
                if (t != 0 && w + wt < dfree)
                    depth[w + wt][t] = std::max(depth[w + wt][t], depth[w][s] + 1);
            }
        }
    }
    if (max_depth > depth_cap)
        throw DepthCapExceeded("T_dfree search exceeded the depth cap of " +
                               std::to_string(depth_cap));
    return static_cast<int>(max_depth) + 1;
}

CodeMetrics analyze(const EncoderFSM& fsm) {
    CodeMetrics m;
    m.delta = fsm.delta;
    m.row_degrees = fsm.row_degrees;
    m.minimal_certified = minimal_basic_certified(fsm.generator);
    m.catastrophic = catastrophic_check(fsm);
    if (!m.catastrophic) {
        m.dfree = free_distance(fsm);
        m.tdfree = t_dfree(fsm, m.dfree);
    }
    return m;
}

PolyMatrix output_code(const PolyMatrix& g_in, const ScalarMatrix& m_t) {
    return polymat_times_scalar(g_in, m_t);
}

}  // namespace necc
