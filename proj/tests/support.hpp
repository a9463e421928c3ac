#ifndef RANK2_TESTS_SUPPORT_HPP
#define RANK2_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "rank2/presentation.hpp"

namespace rank2::testsupport {

// Random valid homeomorphism-mode presentations for oracle-agreement and
// property tests.  Every limit orbit ends up referenced; family sizes honor
// the divisibility rule.
inline SystemPresentation random_presentation(std::mt19937& rng, int maxOrbits = 6,
                                              int maxLambda = 8, int maxConnectors = 8,
                                              int maxFamilies = 2) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    SystemPresentation s;
    s.mode = Mode::Homeomorphism;

    int numLimit = pick(1, std::max(1, maxOrbits / 2));
    int numIsolated = pick(0, maxOrbits - numLimit);
    for (int i = 0; i < numLimit; ++i)
        s.orbits.push_back({"L" + std::to_string(i), pick(1, maxLambda), OrbitKind::Limit,
                            std::nullopt});
    for (int i = 0; i < numIsolated; ++i)
        s.orbits.push_back({"I" + std::to_string(i), pick(1, maxLambda), OrbitKind::Isolated,
                            std::nullopt});

    int numConnectors = pick(0, maxConnectors);
    for (int i = 0; i < numConnectors; ++i) {
        const auto& left = s.orbits[pick(0, numLimit - 1)];
        const auto& right = s.orbits[pick(0, numLimit - 1)];
        s.connectors.push_back({"z" + std::to_string(i),
                                {left.id, 0},
                                {right.id, pick(0, right.lambda - 1)},
                                {}});
    }

    int numFamilies = pick(0, maxFamilies);
    for (int i = 0; i < numFamilies; ++i) {
        const auto& limit = s.orbits[pick(0, numLimit - 1)];
        int mult = pick(limit.lambda == 1 ? 2 : 1, 3);
        s.families.push_back({"F" + std::to_string(i), limit.lambda * mult, limit.id});
    }

    // reference any limit orbit still dangling
    int extra = 0;
    for (int i = 0; i < numLimit; ++i) {
        const auto& o = s.orbits[i];
        bool referenced = false;
        for (const auto& c : s.connectors)
            if (c.left.orbit == o.id || c.right.orbit == o.id) referenced = true;
        for (const auto& f : s.families)
            if (f.limit == o.id) referenced = true;
        if (!referenced)
            s.connectors.push_back({"zz" + std::to_string(extra++),
                                    {o.id, 0},
                                    {o.id, pick(0, o.lambda - 1)},
                                    {}});
    }
    return s;
}

}  // namespace rank2::testsupport

#endif
