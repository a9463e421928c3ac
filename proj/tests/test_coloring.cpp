#include <doctest.h>

#include <map>
#include <random>

#include "rank2/coloring.hpp"
#include "support.hpp"

using namespace rank2;

namespace {

// 2^|V| enumeration oracle for bipartiteness, |V| small.
bool two_colorable_by_enumeration(const FiniteGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (auto [a, b] : g.edges) {
            if (((mask >> a) & 1u) == ((mask >> b) & 1u)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return g.edges.empty() || n == 0 ? true : false;
}

SystemPresentation two_even_orbits_even_connector() {
    SystemPresentation s;
    s.mode = Mode::Homeomorphism;
    s.orbits.push_back({"a", 2, OrbitKind::Limit, std::nullopt});
    s.orbits.push_back({"b", 2, OrbitKind::Limit, std::nullopt});
    s.connectors.push_back({"z", {"a", 0}, {"b", 0}, {}});
    return s;
}

}  // namespace

TEST_CASE("constraint system of Sigma_p l=0 is a single odd self-equation") {
    ParityConstraintSystem sys = constraint_system(make_sigma_p({0, {2}, 1, {}}));
    REQUIRE(sys.variables.size() == 1);
    REQUIRE(sys.equations.size() == 1);
    CHECK(sys.equations[0].left == "y0");
    CHECK(sys.equations[0].right == "y0");
    CHECK(sys.equations[0].parity == 1);
    CHECK_FALSE(xor_system_consistent(sys, nullptr, nullptr));
}

TEST_CASE("constraint system rejects fixed limit orbits") {
    CHECK_THROWS_AS(constraint_system(make_n_sigma(2)), PreconditionViolated);
}

TEST_CASE("constraint system of Sigma_p l=1 eps=0: parities 0 then 1") {
    ParityConstraintSystem sys = constraint_system(make_sigma_p({1, {2, 2}, 1, {0}}));
    REQUIRE(sys.equations.size() == 2);
    CHECK(sys.equations[0].parity == 0);
    CHECK(sys.equations[1].parity == 1);
    CHECK(sys.equations[0].left == "y0");
    CHECK(sys.equations[0].right == "y1");
    CHECK_FALSE(xor_system_consistent(sys, nullptr, nullptr));
}

TEST_CASE("duplicating an equation never changes consistency") {
    for (const PTuple& p : {PTuple{1, {2, 2}, 1, {0}}, PTuple{2, {2, 4, 2}, 1, {0, 1}}}) {
        ParityConstraintSystem sys = constraint_system(make_sigma_p(p));
        bool before = xor_system_consistent(sys, nullptr, nullptr);
        sys.equations.push_back(sys.equations.front());
        CHECK(xor_system_consistent(sys, nullptr, nullptr) == before);
    }
    ParityConstraintSystem consistent;
    consistent.variables = {"a", "b"};
    consistent.equations.push_back({"a", "b", 1, "e0"});
    CHECK(xor_system_consistent(consistent, nullptr, nullptr));
    consistent.equations.push_back({"a", "b", 1, "e1"});
    CHECK(xor_system_consistent(consistent, nullptr, nullptr));
}

TEST_CASE("minimal inconsistent cycle is deterministic and odd") {
    ParityConstraintSystem sys;
    sys.variables = {"a", "b", "c"};
    sys.equations.push_back({"a", "b", 0, "e0"});
    sys.equations.push_back({"b", "c", 0, "e1"});
    sys.equations.push_back({"c", "a", 1, "e2"});
    sys.equations.push_back({"a", "b", 1, "e3"});  // makes a shorter odd cycle with e0
    std::vector<CycleStep> cycle;
    CHECK_FALSE(xor_system_consistent(sys, nullptr, &cycle));
    REQUIRE(cycle.size() == 2);  // e0 + e3 beats the triangle
    CHECK(cycle[0].connector == "e0");
    CHECK(cycle[1].connector == "e3");
    int paritySum = 0;
    for (const auto& step : cycle)
        for (const auto& eq : sys.equations)
            if (eq.connector == step.connector) paritySum ^= eq.parity;
    CHECK(paritySum == 1);
}

TEST_CASE("decide: odd cycles are not 2-colorable") {
    for (int q = 0; q <= 5; ++q) {
        ColoringDecision d = decide_continuous_coloring(make_odd_cycle(q), Kappa::Two);
        REQUIRE_FALSE(d.colorable);
        CHECK(d.obstruction->kind == Obstruction::Kind::OddFiniteOrbit);
        CHECK(d.obstruction->length == 2 * q + 3);
    }
}

TEST_CASE("decide: X1 has no continuous coloring at kappa >= 2") {
    for (Kappa k : {Kappa::Two, Kappa::Three, Kappa::Aleph0}) {
        ColoringDecision d = decide_continuous_coloring(make_x1(), k);
        REQUIRE_FALSE(d.colorable);
        CHECK(d.obstruction->kind == Obstruction::Kind::FixedPointNotOpen);
    }
}

TEST_CASE("decide at aleph_0 over the named families") {
    for (const PTuple& p : {PTuple{0, {2}, 1, {}}, PTuple{1, {4, 2}, 3, {1}}})
        CHECK(decide_continuous_coloring(make_sigma_p(p), Kappa::Aleph0).colorable);
    for (int n = 0; n <= 8; ++n) {
        bool expectNot = (n == 1) || (n % 2 == 0);
        ColoringDecision d = decide_continuous_coloring(make_n_sigma(n), Kappa::Aleph0);
        CHECK(d.colorable == !expectNot);
    }
}

TEST_CASE("decide at kappa 0 and 1") {
    CHECK(decide_continuous_coloring(SystemPresentation{}, Kappa::Zero).colorable);
    CHECK_FALSE(decide_continuous_coloring(make_x1(), Kappa::Zero).colorable);
    CHECK_FALSE(decide_continuous_coloring(make_x1(), Kappa::One).colorable);

    SystemPresentation dots;
    dots.orbits.push_back({"p", 1, OrbitKind::Isolated, std::nullopt});
    CHECK(decide_continuous_coloring(dots, Kappa::One).colorable);
    CHECK_FALSE(decide_continuous_coloring(dots, Kappa::Zero).colorable);
}

TEST_CASE("monotonicity in kappa") {
    std::mt19937 rng(20240811);
    const Kappa ladder[] = {Kappa::Zero, Kappa::One, Kappa::Two, Kappa::Three, Kappa::Aleph0};
    for (int trial = 0; trial < 120; ++trial) {
        SystemPresentation s = testsupport::random_presentation(rng);
        REQUIRE(validate(s).ok());
        bool seen = false;
        for (Kappa k : ladder) {
            bool colorable = decide_continuous_coloring(s, k).colorable;
            if (seen) CHECK(colorable);
            seen = seen || colorable;
        }
    }
}

TEST_CASE("relabeling orbits leaves the decision unchanged") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        SystemPresentation s = testsupport::random_presentation(rng);
        SystemPresentation renamed = s;
        auto rename = [](std::string& id) { id = "Q_" + id; };
        for (auto& o : renamed.orbits) rename(o.id);
        for (auto& c : renamed.connectors) {
            rename(c.left.orbit);
            rename(c.right.orbit);
        }
        for (auto& f : renamed.families) rename(f.limit);
        CHECK(decide_continuous_coloring(s, Kappa::Two).colorable ==
              decide_continuous_coloring(renamed, Kappa::Two).colorable);
    }
}

TEST_CASE("odd limit orbits obstruct at kappa 2 even when F is open") {
    SystemPresentation s;
    s.mode = Mode::Subshift;
    s.orbits.push_back({"w", 3, OrbitKind::Limit, Word{"0", "1", "2"}});
    s.connectors.push_back({"z", {"w", 0}, {"w", 1}, {}});
    REQUIRE(validate(s).ok());
    ColoringDecision d = decide_continuous_coloring(s, Kappa::Two);
    REQUIRE_FALSE(d.colorable);
    CHECK(d.obstruction->kind == Obstruction::Kind::OddFiniteOrbit);
    CHECK(d.obstruction->length == 3);
    CHECK(d.obstruction->id == "w");
    CHECK_FALSE(constrained_truncation_colorable(s, 8));
    // at aleph_0 the same system is fine: no fixed points at all
    CHECK(decide_continuous_coloring(s, Kappa::Aleph0).colorable);
}

TEST_CASE("decision is invariant under reordering the orbit list") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        SystemPresentation s = testsupport::random_presentation(rng);
        SystemPresentation shuffled = s;
        std::shuffle(shuffled.orbits.begin(), shuffled.orbits.end(), rng);
        std::shuffle(shuffled.connectors.begin(), shuffled.connectors.end(), rng);
        CHECK(decide_continuous_coloring(s, Kappa::Two).colorable ==
              decide_continuous_coloring(shuffled, Kappa::Two).colorable);
    }
}

TEST_CASE("finite_two_colorable: certificates and colorings") {
    FiniteGraph c3 = truncate(make_odd_cycle(0), 2);
    TwoColoringResult r3 = finite_two_colorable(c3);
    CHECK_FALSE(r3.coloring.has_value());
    CHECK(r3.oddCycle.size() == 3);

    FiniteGraph path;
    for (int i = 0; i < 5; ++i) path.add_vertex("v" + std::to_string(i));
    for (int i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
    TwoColoringResult rp = finite_two_colorable(path);
    REQUIRE(rp.coloring.has_value());
    CHECK(*rp.coloring == std::vector<int>{0, 1, 0, 1, 0});

    FiniteGraph c6;
    for (int i = 0; i < 6; ++i) c6.add_vertex("w" + std::to_string(i));
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK(finite_two_colorable(c6).coloring.has_value());
}

TEST_CASE("finite_two_colorable agrees with exhaustive enumeration") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 12)(rng);
        FiniteGraph g;
        for (int i = 0; i < n; ++i) g.add_vertex("n" + std::to_string(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) g.add_edge(i, j);
        TwoColoringResult r = finite_two_colorable(g);
        CHECK(r.coloring.has_value() == two_colorable_by_enumeration(g));
        if (r.coloring) {
            for (auto [a, b] : g.edges) CHECK((*r.coloring)[a] != (*r.coloring)[b]);
        } else {
            CHECK(r.oddCycle.size() % 2 == 1);
        }
    }
}

TEST_CASE("constrained truncation oracle on the worked examples") {
    CHECK_FALSE(constrained_truncation_colorable(make_sigma_p({0, {2}, 1, {}}), 8));
    CHECK(constrained_truncation_colorable(two_even_orbits_even_connector(), 8));
    for (int N : {2, 5, 9}) CHECK_FALSE(constrained_truncation_colorable(make_x1(), N));
}

TEST_CASE("oracle agreement on random presentations") {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 120; ++trial) {
        SystemPresentation s = testsupport::random_presentation(rng);
        bool engine = decide_continuous_coloring(s, Kappa::Two).colorable;
        bool oracle = constrained_truncation_colorable(s, default_truncation_depth(s));
        CHECK(engine == oracle);
    }
}

TEST_CASE("witnesses verify at N in {4, 8, 16}") {
    std::mt19937 rng(1331);
    int verified = 0;
    for (int trial = 0; trial < 80; ++trial) {
        SystemPresentation s = testsupport::random_presentation(rng);
        for (Kappa k : {Kappa::Two, Kappa::Aleph0}) {
            ColoringDecision d = decide_continuous_coloring(s, k);
            if (!d.colorable) continue;
            for (int N : {4, 8, 16}) {
                CHECK(verify_witness(s, *d.witness, N));
                ++verified;
            }
        }
    }
    CHECK(verified > 0);
}

TEST_CASE("a flipped orientation bit fails verification") {
    SystemPresentation s = two_even_orbits_even_connector();
    ColoringDecision d = decide_continuous_coloring(s, Kappa::Two);
    REQUIRE(d.colorable);
    CHECK(verify_witness(s, *d.witness, 16));
    Witness broken = *d.witness;
    broken.orientations["b"] ^= 1;
    CHECK_FALSE(verify_witness(s, broken, 16));
}

TEST_CASE("N0 depth formula") {
    SystemPresentation s = make_sigma_p({1, {2, 4}, 1, {0}});
    CHECK(default_truncation_depth(s) == 2 * 4 * (2 + 0 + 1));
}
