#include <doctest.h>

#include <random>

#include "necc/network.hpp"
#include "necc/textio.hpp"

using namespace necc;

namespace {

const std::string kData = NECC_DATA_DIR;

NetworkSpec butterfly(int q) {
    return load_network_file(kData + (q == 2 ? "/butterfly_f2.net" : "/butterfly_f3.net"));
}

NetworkSpec combination() { return load_network_file(kData + "/combination_4c2_f3.net"); }

ScalarMatrix mat(const Field& f, int r, int c, std::vector<int> e) {
    return ScalarMatrix(f, r, c, std::move(e));
}

}  // namespace

TEST_CASE("butterfly transfer matrices over F_2") {
    NetworkSpec spec = butterfly(2);
    TransferSet ts = build_transfer(spec);
    const Field& f = spec.field;
    REQUIRE(ts.sinks.size() == 2);
    CHECK(ts.sink("T1").m_t == mat(f, 2, 2, {1, 1, 0, 1}));
    CHECK(ts.sink("T2").m_t == mat(f, 2, 2, {1, 0, 1, 1}));
    CHECK(ts.sink("T1").m_t_inv == ts.sink("T1").m_t);
    CHECK(ts.sink("T2").m_t_inv == ts.sink("T2").m_t);

    // Edge-error images at the sinks, row e = image of a unit error on e.
    CHECK(ts.sink("T1").f_t ==
          mat(f, 9, 2, {1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0}));
    CHECK(ts.sink("T2").f_t ==
          mat(f, 9, 2, {1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1}));
}

TEST_CASE("combination network transfer matrices") {
    TransferSet ts = build_transfer(combination());
    const Field& f = ts.field;
    REQUIRE(ts.sinks.size() == 6);
    CHECK(ts.sink("T1").m_t == mat(f, 2, 2, {1, 0, 0, 1}));
    CHECK(ts.sink("T2").m_t == mat(f, 2, 2, {1, 1, 0, 1}));
    CHECK(ts.sink("T3").m_t == mat(f, 2, 2, {1, 1, 0, 2}));
    CHECK(ts.sink("T4").m_t == mat(f, 2, 2, {0, 1, 1, 1}));
    CHECK(ts.sink("T5").m_t == mat(f, 2, 2, {0, 1, 1, 2}));
    CHECK(ts.sink("T6").m_t == mat(f, 2, 2, {1, 1, 1, 2}));
}

TEST_CASE("single edge network") {
    NetworkSpec spec;
    spec.field = make_field(5);
    spec.num_inputs = 1;
    spec.source = "s";
    spec.sinks = {"T"};
    spec.edges = {{"s", "T"}};
    TransferSet ts = build_transfer(spec);
    CHECK(ts.sink("T").m_t == mat(spec.field, 1, 1, {1}));
}

TEST_CASE("transfer solve satisfies its defining equations") {
    for (const NetworkSpec& spec : {butterfly(2), butterfly(3), combination()}) {
        TransferSet ts = build_transfer(spec);
        const Field& f = spec.field;
        const int ne = spec.num_edges();
        ScalarMatrix i_minus_k(f, ne, ne);
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j < ne; ++j)
                i_minus_k.set(i, j, f.sub(i == j ? 1 : 0, ts.k.at(i, j)));
        CHECK(i_minus_k * ts.f == ScalarMatrix::identity(f, ne));

        // F equals the geometric series of the nilpotent K.
        ScalarMatrix series = ScalarMatrix::identity(f, ne);
        ScalarMatrix power = ScalarMatrix::identity(f, ne);
        for (int t = 1; t < ne; ++t) {
            power = power * ts.k;
            series = series + power;
        }
        CHECK(series == ts.f);

        // K strictly upper triangular.
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j <= i; ++j) CHECK(ts.k.at(i, j) == 0);

        for (const auto& s : ts.sinks)
            CHECK(s.m_t * s.m_t_inv == ScalarMatrix::identity(f, ts.num_inputs));
    }
}

TEST_CASE("propagation through the butterfly") {
    TransferSet ts = build_transfer(butterfly(2));
    auto y = propagate(ts, {1, 0}, std::vector<int>(9, 0));
    CHECK(y[0] == std::vector<int>{1, 1});
    CHECK(y[1] == std::vector<int>{1, 0});

    auto zero = propagate(ts, {0, 0}, std::vector<int>(9, 0));
    CHECK(zero[0] == std::vector<int>{0, 0});
    CHECK(zero[1] == std::vector<int>{0, 0});

    std::vector<int> e9(9, 0);
    e9[8] = 1;
    auto err = propagate(ts, {0, 0}, e9);
    CHECK(err[0] == std::vector<int>{0, 0});
    CHECK(err[1] == std::vector<int>{0, 1});
}

TEST_CASE("propagate is jointly linear and matches F_T rows") {
    std::mt19937 rng(17);
    for (const NetworkSpec& spec : {butterfly(3), combination()}) {
        TransferSet ts = build_transfer(spec);
        const Field& f = spec.field;
        const int ne = spec.num_edges();
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> x1(2), x2(2), w1(ne), w2(ne);
            for (auto* v : {&x1, &x2})
                for (auto& s : *v) s = static_cast<int>(rng() % f.q());
            for (auto* v : {&w1, &w2})
                for (auto& s : *v) s = static_cast<int>(rng() % f.q());
            std::vector<int> xs(2), ws(ne);
            for (int i = 0; i < 2; ++i) xs[i] = f.add(x1[i], x2[i]);
            for (int i = 0; i < ne; ++i) ws[i] = f.add(w1[i], w2[i]);
            auto a = propagate(ts, x1, w1), b = propagate(ts, x2, w2),
                 sum = propagate(ts, xs, ws);
            for (size_t s = 0; s < sum.size(); ++s)
                for (int i = 0; i < 2; ++i) CHECK(sum[s][i] == f.add(a[s][i], b[s][i]));
        }
        // Unit error on edge e lands as row e of F_T.
        for (int e = 0; e < ne; ++e) {
            std::vector<int> w(ne, 0);
            w[e] = 1;
            auto y = propagate(ts, std::vector<int>(2, 0), w);
            for (size_t s = 0; s < ts.sinks.size(); ++s)
                for (int i = 0; i < 2; ++i) CHECK(y[s][i] == ts.sinks[s].f_t.at(e, i));
        }
    }
}

TEST_CASE("kernel defaults match explicit coefficients") {
    NetworkSpec spec = butterfly(2);
    NetworkSpec explicit_spec = spec;
    // Spell out the unity intermediate kernels and identity sink maps that the
    // shipped file leaves implicit.
    for (int i = 0; i < spec.num_edges(); ++i)
        for (int j = 0; j < spec.num_edges(); ++j)
            if (spec.edges[i].head == spec.edges[j].tail)
                explicit_spec.beta[{i + 1, j + 1}] = 1;
    for (const auto& sink : spec.sinks) {
        auto in = spec.in_edges(sink);
        for (size_t j = 0; j < in.size(); ++j)
            explicit_spec.eps[sink][{in[j], static_cast<int>(j) + 1}] = 1;
    }
    TransferSet a = build_transfer(spec), b = build_transfer(explicit_spec);
    CHECK(a.k == b.k);
    CHECK(a.a == b.a);
    for (size_t i = 0; i < a.sinks.size(); ++i) {
        CHECK(a.sinks[i].m_t == b.sinks[i].m_t);
        CHECK(a.sinks[i].f_t == b.sinks[i].f_t);
    }
}

TEST_CASE("validation errors") {
    NetworkSpec spec = butterfly(2);

    SUBCASE("cycle") {
        spec.edges.push_back({"T2", "s"});
        CHECK_THROWS_AS(build_transfer(spec), CyclicGraph);
    }
    SUBCASE("edge order violates ancestry") {
        std::swap(spec.edges[2], spec.edges[6]);  // x->T1 now precedes its parent w->x
        CHECK_THROWS_AS(build_transfer(spec), BadOrdering);
    }
    SUBCASE("rank-deficient sink") {
        spec.alpha.clear();
        spec.alpha[{1, 1}] = 1;
        spec.alpha[{2, 1}] = 1;  // both inputs ride edge 1 only
        CHECK_THROWS_AS(build_transfer(spec), RankDeficientSink);
    }
    SUBCASE("alpha off the source") {
        spec.alpha[{1, 6}] = 1;
        CHECK_THROWS_AS(build_transfer(spec), Error);
    }
    SUBCASE("dimension mismatches in propagate") {
        TransferSet ts = build_transfer(spec);
        CHECK_THROWS_AS(propagate(ts, {1, 0, 0}, std::vector<int>(9, 0)), DimensionMismatch);
        CHECK_THROWS_AS(propagate(ts, {1, 0}, std::vector<int>(8, 0)), DimensionMismatch);
    }
}
