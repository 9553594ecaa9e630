#include "necc/network.hpp"

#include <algorithm>
#include <set>

namespace necc {

std::vector<int> NetworkSpec::out_edges(const std::string& v) const {
    std::vector<int> out;
    for (int i = 0; i < num_edges(); ++i)
        if (edges[i].tail == v) out.push_back(i + 1);
    return out;
}

std::vector<int> NetworkSpec::in_edges(const std::string& v) const {
    std::vector<int> in;
    for (int i = 0; i < num_edges(); ++i)
        if (edges[i].head == v) in.push_back(i + 1);
    return in;
}

const SinkTransfer& TransferSet::sink(const std::string& name) const {
    for (const auto& s : sinks)
        if (s.sink == name) return s;
    throw Error("unknown sink " + name);
}

namespace {

void check_acyclic(const NetworkSpec& spec) {
    // Kahn's algorithm on the vertex graph.
    std::set<std::string> vertices;
    vertices.insert(spec.source);
    for (const auto& s : spec.sinks) vertices.insert(s);
    for (const auto& e : spec.edges) {
        vertices.insert(e.tail);
        vertices.insert(e.head);
    }
    std::map<std::string, int> indeg;
    for (const auto& v : vertices) indeg[v] = 0;
    for (const auto& e : spec.edges) indeg[e.head]++;
    std::vector<std::string> queue;
    for (const auto& [v, d] : indeg)
        if (d == 0) queue.push_back(v);
    size_t seen = 0;
    while (!queue.empty()) {
        std::string v = queue.back();
        queue.pop_back();
        ++seen;
        for (const auto& e : spec.edges)
            if (e.tail == v && --indeg[e.head] == 0) queue.push_back(e.head);
    }
    if (seen != vertices.size()) throw CyclicGraph("network graph contains a directed cycle");
}

void validate(const NetworkSpec& spec) {
    if (!spec.field.valid()) throw Error("network has no field");
    if (spec.num_inputs < 1) throw Error("network needs at least one input");
    if (spec.edges.empty()) throw Error("network has no edges");
    if (spec.sinks.empty()) throw Error("network has no sinks");
    check_acyclic(spec);

    auto src_out = spec.out_edges(spec.source);
    std::set<int> src_out_set(src_out.begin(), src_out.end());
    for (const auto& [key, val] : spec.alpha) {
        auto [input, edge] = key;
        if (input < 1 || input > spec.num_inputs) throw Error("alpha input index out of range");
        if (edge < 1 || edge > spec.num_edges()) throw Error("alpha edge index out of range");
        if (!src_out_set.count(edge))
            throw Error("alpha coefficient on edge " + std::to_string(edge) +
                        " which does not leave the source");
        if (!spec.field.is_element(val)) throw Error("alpha coefficient outside the field");
    }
    for (const auto& [key, val] : spec.beta) {
        auto [ei, ej] = key;
        if (ei < 1 || ei > spec.num_edges() || ej < 1 || ej > spec.num_edges())
            throw Error("beta edge index out of range");
        if (spec.edges[ei - 1].head != spec.edges[ej - 1].tail)
            throw Error("beta coefficient between non-adjacent edges " + std::to_string(ei) +
                        "," + std::to_string(ej));
        if (!spec.field.is_element(val)) throw Error("beta coefficient outside the field");
    }
    for (const auto& [sink, coeffs] : spec.eps) {
        if (std::find(spec.sinks.begin(), spec.sinks.end(), sink) == spec.sinks.end())
            throw Error("eps coefficient for unknown sink " + sink);
        auto in = spec.in_edges(sink);
        std::set<int> in_set(in.begin(), in.end());
        for (const auto& [key, val] : coeffs) {
            auto [edge, col] = key;
            if (!in_set.count(edge))
                throw Error("eps coefficient on edge " + std::to_string(edge) +
                            " which does not enter sink " + sink);
            if (col < 1 || col > spec.num_inputs) throw Error("eps component index out of range");
            if (!spec.field.is_element(val)) throw Error("eps coefficient outside the field");
        }
    }
}

}  // namespace

TransferSet build_transfer(const NetworkSpec& spec) {
    validate(spec);
    const Field& f = spec.field;
    const int n = spec.num_inputs;
    const int ne = spec.num_edges();

    // K: beta on adjacent pairs, default unity when no beta lines were given.
    ScalarMatrix k(f, ne, ne);
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j) {
            if (spec.edges[i].head != spec.edges[j].tail) continue;
            int val;
            if (spec.beta.empty()) {
                val = 1;
            } else {
                auto it = spec.beta.find({i + 1, j + 1});
                val = it == spec.beta.end() ? 0 : it->second;
            }
            if (val == 0) continue;
            if (j <= i)
                throw BadOrdering("edges " + std::to_string(i + 1) + " -> " +
                                  std::to_string(j + 1) +
                                  " violate the ancestral edge order (K not strictly upper "
                                  "triangular)");
            k.set(i, j, val);
        }
    // Adjacency alone must respect the order even where beta is zero.
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j <= i; ++j)
            if (spec.edges[i].head == spec.edges[j].tail && i != j)
                throw BadOrdering("adjacent edges " + std::to_string(i + 1) + " -> " +
                                  std::to_string(j + 1) + " violate the ancestral edge order");

    // A: source local kernels; identity-like default.
    ScalarMatrix a(f, n, ne);
    auto src_out = spec.out_edges(spec.source);
    if (spec.alpha.empty()) {
        if (static_cast<int>(src_out.size()) < n)
            throw Error("source has fewer outgoing edges than inputs and no alpha kernels given");
        for (int i = 0; i < n; ++i) a.set(i, src_out[i] - 1, 1);
    } else {
        for (const auto& [key, val] : spec.alpha) a.set(key.first - 1, key.second - 1, val);
    }

    // F from (I - K) F = I: column by column, rows bottom-up.
    ScalarMatrix ff(f, ne, ne);
    for (int col = 0; col < ne; ++col)
        for (int i = ne - 1; i >= 0; --i) {
            int v = (i == col) ? 1 : 0;
            for (int t = i + 1; t < ne; ++t)
                if (k.at(i, t) != 0) v = f.add(v, f.mul(k.at(i, t), ff.at(t, col)));
            ff.set(i, col, v);
        }

    TransferSet ts{f, n, a, k, ff, {}};
    for (const auto& sink : spec.sinks) {
        ScalarMatrix bt(f, ne, n);
        auto in = spec.in_edges(sink);
        auto eps_it = spec.eps.find(sink);
        if (eps_it == spec.eps.end() || eps_it->second.empty()) {
            for (int j = 0; j < std::min<int>(n, static_cast<int>(in.size())); ++j)
                bt.set(in[j] - 1, j, 1);
        } else {
            for (const auto& [key, val] : eps_it->second)
                bt.set(key.first - 1, key.second - 1, val);
        }
        ScalarMatrix ft = ff * bt;
        ScalarMatrix mt = a * ft;
        ScalarMatrix mt_inv(f, 0, 0);
        try {
            mt_inv = inverse(mt);
        } catch (const Singular&) {
            throw RankDeficientSink("network transfer matrix at sink " + sink +
                                    " is not full rank");
        }
        ts.sinks.push_back(SinkTransfer{sink, std::move(bt), std::move(ft), std::move(mt),
                                        std::move(mt_inv)});
    }
    return ts;
}

std::vector<std::vector<int>> propagate(const TransferSet& ts, const std::vector<int>& x,
                                        const std::vector<int>& w) {
    if (static_cast<int>(x.size()) != ts.num_inputs)
        throw DimensionMismatch("input vector length must equal n");
    if (static_cast<int>(w.size()) != ts.k.rows())
        throw DimensionMismatch("error vector length must equal |E|");
    std::vector<std::vector<int>> out;
    out.reserve(ts.sinks.size());
    for (const auto& s : ts.sinks) {
        std::vector<int> y = mul_row(x, s.m_t);
        std::vector<int> err = mul_row(w, s.f_t);
        for (size_t i = 0; i < y.size(); ++i) y[i] = ts.field.add(y[i], err[i]);
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace necc
