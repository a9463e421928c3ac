#include <doctest.h>

#include <set>
#include <vector>

#include "rank2/basis.hpp"
#include "rank2/order.hpp"

using namespace rank2;

namespace {

// Every Sigma_p parameter with l <= 2 and lambda_i in {2, 4}.
std::vector<PTuple> small_box() {
    std::vector<PTuple> box;
    for (int l = 0; l <= 2; ++l) {
        std::vector<int> lambdas(l + 1, 2);
        for (;;) {
            for (int m = 1; m < lambdas[0]; m += 2) {
                for (int eps = 0; eps < (1 << l); ++eps) {
                    PTuple p;
                    p.l = l;
                    p.lambdas = lambdas;
                    p.m = m;
                    for (int i = 0; i < l; ++i) p.epsilons.push_back((eps >> i) & 1);
                    box.push_back(p);
                }
            }
            int pos = 0;
            while (pos <= l) {
                lambdas[pos] += 2;
                if (lambdas[pos] <= 4) break;
                lambdas[pos] = 2;
                ++pos;
            }
            if (pos > l) break;
        }
    }
    return box;
}

}  // namespace

TEST_CASE("basis_below on the named examples") {
    CHECK(basis_below(make_x1(), BasisMode::Homeo) == BasisElement::x1());
    CHECK(basis_below(make_odd_cycle(2), BasisMode::Homeo) == BasisElement::odd_cycle(2));
    CHECK(basis_below(make_odd_cycle(2), BasisMode::Subshift) == BasisElement::odd_cycle(2));
    CHECK(basis_below(make_sigma_p({0, {2}, 1, {}}), BasisMode::Homeo).tag ==
          BasisElement::Tag::SigmaP);
}

TEST_CASE("basis_below rejects 2-colorable inputs") {
    SystemPresentation s;
    s.mode = Mode::Homeomorphism;
    s.orbits.push_back({"a", 2, OrbitKind::Limit, std::nullopt});
    s.connectors.push_back({"z", {"a", 0}, {"a", 0}, {}});
    CHECK_THROWS_AS(basis_below(s, BasisMode::Homeo), std::invalid_argument);
}

TEST_CASE("subshift fixed case analysis") {
    CHECK(subshift_fixed_case(make_n_sigma(0)) == 0);
    CHECK(subshift_fixed_case(make_n_sigma(1)) == 1);
    CHECK(subshift_fixed_case(make_n_sigma(4)) == 4);

    // odd orbit on the other side of the tail: the odd-cycle case
    SystemPresentation s;
    s.mode = Mode::Subshift;
    s.orbits.push_back({"0", 1, OrbitKind::Limit, Word{"0"}});
    s.orbits.push_back({"w", 3, OrbitKind::Limit, Word{"1", "2", "3"}});
    s.connectors.push_back({"z", {"0", 0}, {"w", 0}, {}});
    REQUIRE(validate(s).ok());
    CHECK(subshift_fixed_case(s) == 3);
    CHECK(basis_below(s, BasisMode::Subshift) == BasisElement::odd_cycle(0));
    CHECK(basis_below(make_n_sigma(0), BasisMode::Subshift) == BasisElement::n_sigma(0));
    CHECK(basis_below(make_n_sigma(6), BasisMode::Subshift) == BasisElement::n_sigma(6));
    CHECK(basis_below(make_n_sigma(0), BasisMode::Homeo) == BasisElement::x1());
    CHECK_THROWS_AS(subshift_fixed_case(make_x1()), PreconditionViolated);
}

TEST_CASE("NSigma(2q+3) folds into OddCycle(q)") {
    CHECK(BasisElement::n_sigma(3) == BasisElement::odd_cycle(0));
    CHECK(BasisElement::n_sigma(7) == BasisElement::odd_cycle(2));
    CHECK(BasisElement::n_sigma(4).tag == BasisElement::Tag::NSigma);
}

TEST_CASE("extract_p round trips the l=0 tuples exactly") {
    for (const PTuple& p : {PTuple{0, {2}, 1, {}}, PTuple{0, {4}, 1, {}}, PTuple{0, {4}, 3, {}},
                            PTuple{0, {6}, 5, {}}}) {
        CHECK(extract_p(make_sigma_p(p)) == p);
    }
}

TEST_CASE("extract_p lands in the same class for l >= 1") {
    for (const PTuple& p : {PTuple{1, {2, 4}, 1, {0}}, PTuple{1, {2, 2}, 1, {1}},
                            PTuple{2, {4, 2, 2}, 3, {0, 1}}}) {
        PTuple q = extract_p(make_sigma_p(p));
        CHECK(q.valid());
        CHECK(sigma_p_equivalent(p, q));
    }
}

TEST_CASE("extract_p requires an odd constraint cycle") {
    SystemPresentation s;
    s.mode = Mode::Homeomorphism;
    s.orbits.push_back({"a", 2, OrbitKind::Limit, std::nullopt});
    s.orbits.push_back({"b", 2, OrbitKind::Limit, std::nullopt});
    s.connectors.push_back({"z0", {"a", 0}, {"b", 0}, {}});
    s.connectors.push_back({"z1", {"a", 0}, {"b", 0}, {}});  // consistent pair
    CHECK_THROWS_AS(extract_p(s), PreconditionViolated);
}

TEST_CASE("canon_p: reflexive membership, idempotence, lex minimality") {
    for (const PTuple& p : small_box()) {
        std::set<PTuple> family = enumerate_Fp(p);
        CHECK(family.count(p) == 1);
        PTuple c = canon_p(p);
        CHECK(c <= p);
        CHECK(sigma_p_equivalent(c, p));
        CHECK(canon_p(c) == c);
        // canon is constant on the enumerated class
        for (const PTuple& q : family) CHECK(canon_p(q) == c);
    }
}

TEST_CASE("canon_p invariant under cycle rotation and reflection") {
    for (const PTuple& p : {PTuple{1, {2, 4}, 1, {0}}, PTuple{2, {2, 4, 2}, 1, {1, 0}},
                            PTuple{2, {4, 4, 2}, 3, {0, 1}}}) {
        SystemPresentation s = make_sigma_p(p);
        ColoringDecision d = decide_continuous_coloring(s, Kappa::Two);
        REQUIRE_FALSE(d.colorable);
        REQUIRE(d.obstruction->kind == Obstruction::Kind::OddConstraintCycle);
        const auto& cycle = d.obstruction->cycle;
        PTuple expected = canon_p(walk_cycle_to_ptuple(s, cycle, 0, false));
        int normalizable = 0;
        for (std::size_t start = 0; start < cycle.size(); ++start) {
            for (bool rev : {false, true}) {
                PTuple q;
                try {
                    q = walk_cycle_to_ptuple(s, cycle, start, rev);
                } catch (const std::invalid_argument&) {
                    continue;  // closing connector enters forward: not in normal form
                }
                ++normalizable;
                CHECK(canon_p(q) == expected);
            }
        }
        CHECK(normalizable >= 1);
    }
}

TEST_CASE("sigma_p round trip through basis_below") {
    for (const PTuple& p : small_box()) {
        BasisElement e = basis_below(make_sigma_p(p), BasisMode::Subshift);
        REQUIRE(e.tag == BasisElement::Tag::SigmaP);
        CHECK(e.p == canon_p(p));
    }
}

TEST_CASE("basis elements are never 2-colorable") {
    std::vector<BasisElement> elems = {BasisElement::odd_cycle(0), BasisElement::x1(),
                                       BasisElement::n_sigma(0), BasisElement::n_sigma(1),
                                       BasisElement::n_sigma(2), BasisElement::n_sigma(4)};
    for (const PTuple& p : {PTuple{0, {2}, 1, {}}, PTuple{1, {2, 4}, 1, {0}}})
        elems.push_back(BasisElement::sigma_p(p));
    for (const auto& e : elems) {
        SystemPresentation s = materialize(e);
        CHECK_FALSE(decide_continuous_coloring(s, Kappa::Two).colorable);
    }
}

TEST_CASE("enumerate_Fp stays inside the documented box and parallelizes") {
    PTuple p{1, {2, 4}, 1, {0}};
    std::set<PTuple> family = enumerate_Fp(p);
    for (const PTuple& q : family) {
        CHECK(q.l == p.l);
        for (int lam : q.lambdas) CHECK(lam <= 4);
        CHECK(q.m < q.lambdas[0]);
    }
    CHECK(enumerate_Fp(p, 4) == family);
}
