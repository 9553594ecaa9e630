#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "necc/polymat.hpp"

namespace necc {

struct Edge {
    std::string tail;
    std::string head;
};

// Acyclic single-source multicast network with a linear network code.
// Edge order in `edges` IS the ancestral order (1-based indices externally);
// build_transfer verifies it instead of re-sorting so that published edge
// indexings survive round trips.
//
// Kernel defaults when a coefficient map is left empty:
//   alpha empty      -> input i feeds the i-th outgoing edge of the source.
//   beta empty       -> every adjacent edge pair (head(e_i) = tail(e_j))
//                       carries coefficient 1 (unity local kernels).
//   eps empty for T  -> the j-th incoming edge of T (ancestral order) maps to
//                       output component j.
// When a map has any entries, unspecified coefficients of that kind are 0.
struct NetworkSpec {
    Field field;
    int num_inputs = 0;
    std::string source;
    std::vector<std::string> sinks;
    std::vector<Edge> edges;

    std::map<std::pair<int, int>, int> alpha;  // (input 1..n, edge 1..E) -> coefficient
    std::map<std::pair<int, int>, int> beta;   // (edge i, edge j) -> coefficient
    std::map<std::string, std::map<std::pair<int, int>, int>> eps;
    // sink -> (edge 1..E, component 1..n) -> coefficient

    int num_edges() const { return static_cast<int>(edges.size()); }
    std::vector<int> out_edges(const std::string& v) const;  // 1-based, ancestral order
    std::vector<int> in_edges(const std::string& v) const;
};

struct SinkTransfer {
    std::string sink;
    ScalarMatrix b_t;      // |E| x n
    ScalarMatrix f_t;      // |E| x n, F * B^T
    ScalarMatrix m_t;      // n x n network transfer matrix
    ScalarMatrix m_t_inv;  // n x n
};

struct TransferSet {
    Field field;
    int num_inputs = 0;
    ScalarMatrix a;  // n x |E|
    ScalarMatrix k;  // |E| x |E|, strictly upper triangular
    ScalarMatrix f;  // |E| x |E|, (I - K)^{-1}
    std::vector<SinkTransfer> sinks;

    const SinkTransfer& sink(const std::string& name) const;
};

// Assembles A, K, B^T and solves (I - K) F = I by back-substitution on the
// unit upper-triangular system. Throws CyclicGraph, BadOrdering,
// RankDeficientSink.
TransferSet build_transfer(const NetworkSpec& spec);

// One network use: y_T = x M_T + w F_T at every sink, in TransferSet order.
std::vector<std::vector<int>> propagate(const TransferSet& ts, const std::vector<int>& x,
                                        const std::vector<int>& w);

}  // namespace necc
