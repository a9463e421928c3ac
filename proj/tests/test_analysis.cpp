#include <doctest.h>

#include <algorithm>
#include <random>

#include "rank2/analysis.hpp"
#include "rank2/coloring.hpp"
#include "support.hpp"

using namespace rank2;

namespace {

std::vector<int> degree_sequence(const FiniteGraph& g) {
    std::vector<int> deg(g.vertices.size(), 0);
    for (auto [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

}  // namespace

TEST_CASE("cb_derivative keeps exactly the limit orbits, discretized") {
    SystemPresentation s = make_sigma_p({1, {2, 2}, 1, {0}});
    SystemPresentation d = cb_derivative(s);
    REQUIRE(d.orbits.size() == 2);
    for (const auto& o : d.orbits) {
        CHECK(o.lambda == 2);
        CHECK(o.kind == OrbitKind::Isolated);
    }
    CHECK(d.connectors.empty());
    CHECK(d.families.empty());

    CHECK(cb_derivative(make_odd_cycle(0)).empty());
    CHECK(cb_derivative(cb_derivative(make_x1())).empty());
    CHECK(cb_derivative(cb_derivative(make_n_sigma(4))).empty());
}

TEST_CASE("cb_rank") {
    CHECK(cb_rank(SystemPresentation{}) == 0);
    for (int q = 0; q <= 5; ++q) CHECK(cb_rank(make_odd_cycle(q)) == 1);
    CHECK(cb_rank(make_x1()) == 2);
    CHECK(cb_rank(make_sigma_p({0, {2}, 1, {}})) == 2);
}

TEST_CASE("fixed point openness") {
    CHECK_FALSE(fixed_point_set(make_x1()).isOpen);
    CHECK_FALSE(fixed_point_set(make_n_sigma(0)).isOpen);
    CHECK_FALSE(fixed_point_set(make_n_sigma(1)).isOpen);
    CHECK_FALSE(fixed_point_set(make_n_sigma(6)).isOpen);
    CHECK(fixed_point_set(make_odd_cycle(2)).isOpen);
    for (const PTuple& p : {PTuple{0, {2}, 1, {}}, PTuple{1, {4, 2}, 3, {1}}})
        CHECK(fixed_point_set(make_sigma_p(p)).isOpen);
}

TEST_CASE("remove_removables") {
    // Sigma_p plus an extra even isolated orbit comes back to Sigma_p
    SystemPresentation s = make_sigma_p({0, {2}, 1, {}});
    SystemPresentation padded = s;
    padded.orbits.push_back({"extra", 4, OrbitKind::Isolated,
                             Word{"e0", "e1", "e2", "e3"}});
    CHECK(remove_removables(padded) == s);

    // family at a fixed limit orbit stays
    CHECK(remove_removables(make_x1()) == make_x1());

    // isolated fixed points go
    SystemPresentation t = make_x1();
    t.orbits.push_back({"spot", 1, OrbitKind::Isolated, std::nullopt});
    CHECK(remove_removables(t) == make_x1());

    // even family at a non-fixed limit orbit goes
    SystemPresentation u;
    u.mode = Mode::Homeomorphism;
    u.orbits.push_back({"a", 2, OrbitKind::Limit, std::nullopt});
    u.connectors.push_back({"z", {"a", 0}, {"a", 1}, {}});
    u.families.push_back({"f", 2, "a"});
    SystemPresentation reduced = remove_removables(u);
    CHECK(reduced.families.empty());
    CHECK(reduced.orbits.size() == 1);

    // idempotent on a mixed example
    CHECK(remove_removables(reduced) == reduced);
    CHECK(remove_removables(remove_removables(padded)) == remove_removables(padded));
}

TEST_CASE("openness stable under remove_removables") {
    for (const SystemPresentation& s :
         {make_x1(), make_n_sigma(0), make_n_sigma(2), make_sigma_p({1, {2, 4}, 1, {0}})}) {
        CHECK(fixed_point_set(remove_removables(s)).isOpen == fixed_point_set(s).isOpen);
    }
}

TEST_CASE("truncation of an odd cycle is the cycle itself") {
    for (int N : {1, 4, 9}) {
        FiniteGraph g = truncate(make_odd_cycle(0), N);
        CHECK(g.vertices.size() == 3);
        CHECK(g.edges.size() == 3);
    }
}

TEST_CASE("truncation of 0Sigma at N=2: path on 5 plus isolated fixed vertex") {
    FiniteGraph g = truncate(make_n_sigma(0), 2);
    CHECK(g.vertices.size() == 6);
    CHECK(g.edges.size() == 4);
    CHECK(degree_sequence(g) == std::vector<int>{0, 1, 1, 2, 2, 2});
}

TEST_CASE("truncation vertex count of Sigma_p (l=0) at N=3") {
    FiniteGraph g = truncate(make_sigma_p({0, {2}, 1, {}}), 3);
    CHECK(g.vertices.size() == 2 + 7);
}

TEST_CASE("truncation is monotone: N-window is an induced subgraph of N+1") {
    for (const SystemPresentation& s : {make_n_sigma(2), make_sigma_p({1, {2, 4}, 1, {0}}),
                                        make_x1()}) {
        for (int N : {1, 3, 5}) {
            FiniteGraph small = truncate(s, N);
            FiniteGraph big = truncate(s, N + 1);
            for (const auto& v : small.vertices) CHECK(big.index_of(v) >= 0);
            for (auto [a, b] : small.edges) {
                CHECK(big.has_edge(big.index_of(small.vertices[a]),
                                   big.index_of(small.vertices[b])));
            }
            // induced: any big edge between small vertices is a small edge
            for (auto [a, b] : big.edges) {
                int ia = small.index_of(big.vertices[a]);
                int ib = small.index_of(big.vertices[b]);
                if (ia >= 0 && ib >= 0) CHECK(small.has_edge(ia, ib));
            }
        }
    }
}

TEST_CASE("truncations without odd finite orbits are bipartite") {
    for (const SystemPresentation& s :
         {make_x1(), make_n_sigma(0), make_n_sigma(1), make_n_sigma(2), make_n_sigma(4),
          make_sigma_p({0, {4}, 3, {}}), make_sigma_p({2, {2, 2, 2}, 1, {0, 1}})}) {
        CHECK(finite_two_colorable(truncate(s, 6)).coloring.has_value());
    }
    CHECK_FALSE(finite_two_colorable(truncate(make_odd_cycle(1), 6)).coloring.has_value());
}

TEST_CASE("structural properties hold on random presentations") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 80; ++trial) {
        SystemPresentation s = testsupport::random_presentation(rng);
        REQUIRE(validate(s).ok());
        CHECK(cb_derivative(cb_derivative(s)).empty());
        SystemPresentation reduced = remove_removables(s);
        CHECK(remove_removables(reduced) == reduced);
        CHECK(fixed_point_set(reduced).isOpen == fixed_point_set(s).isOpen);
    }
}

TEST_CASE("dot export is stable") {
    FiniteGraph g = truncate(make_odd_cycle(0), 1);
    CHECK(to_dot(g) ==
          "graph truncation {\n"
          "  \"c:0\";\n"
          "  \"c:1\";\n"
          "  \"c:2\";\n"
          "  \"c:0\" -- \"c:1\";\n"
          "  \"c:0\" -- \"c:2\";\n"
          "  \"c:1\" -- \"c:2\";\n"
          "}\n");
}
