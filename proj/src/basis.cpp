#include "rank2/basis.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "rank2/order.hpp"

namespace rank2 {

BasisElement BasisElement::odd_cycle(int q) {
    if (q < 0) throw std::invalid_argument("BasisElement::odd_cycle: q must be >= 0");
    BasisElement e;
    e.tag = Tag::OddCycle;
    e.q = q;
    return e;
}

BasisElement BasisElement::x1() {
    BasisElement e;
    e.tag = Tag::X1;
    return e;
}

BasisElement BasisElement::n_sigma(int n) {
    if (n < 0) throw std::invalid_argument("BasisElement::n_sigma: n must be >= 0");
    if (n >= 3 && n % 2 == 1) return odd_cycle((n - 3) / 2);  // identified subshifts
    BasisElement e;
    e.tag = Tag::NSigma;
    e.n = n;
    return e;
}

BasisElement BasisElement::sigma_p(PTuple p) {
    if (!p.valid())
        throw std::invalid_argument("BasisElement::sigma_p: invalid PTuple " + p.to_string());
    BasisElement e;
    e.tag = Tag::SigmaP;
    e.p = std::move(p);
    return e;
}

std::string BasisElement::to_string() const {
    switch (tag) {
        case Tag::OddCycle: return "OddCycle(" + std::to_string(q) + ")";
        case Tag::X1: return "X1";
        case Tag::NSigma: return "NSigma(" + std::to_string(n) + ")";
        case Tag::SigmaP: return "SigmaP" + p.to_string();
    }
    return "?";
}

SystemPresentation materialize(const BasisElement& e) {
    switch (e.tag) {
        case BasisElement::Tag::OddCycle: return make_odd_cycle(e.q);
        case BasisElement::Tag::X1: return make_x1();
        case BasisElement::Tag::NSigma: return make_n_sigma(e.n);
        case BasisElement::Tag::SigmaP: return make_sigma_p(e.p);
    }
    throw std::logic_error("materialize: bad tag");
}

int subshift_fixed_case(const SystemPresentation& s) {
    require_valid(s, "subshift_fixed_case");
    if (s.mode != Mode::Subshift)
        throw PreconditionViolated("subshift_fixed_case: NoFixedWitness: not a subshift");
    FixedPointReport fp = fixed_point_set(s);
    if (fp.isOpen)
        throw PreconditionViolated("subshift_fixed_case: NoFixedWitness: fixed points are open");
    const std::string fixed = *fp.fixedLimitOrbits.begin();

    const ConnectorSpec* chosen = nullptr;
    for (const auto& c : s.connectors) {
        if (c.left.orbit != fixed && c.right.orbit != fixed) continue;
        if (!chosen || c.id < chosen->id) chosen = &c;
    }
    if (!chosen)
        throw PreconditionViolated("subshift_fixed_case: NoFixedWitness: no incident connector");

    if (chosen->left.orbit == chosen->right.orbit) return 0;
    const std::string other =
        chosen->left.orbit == fixed ? chosen->right.orbit : chosen->left.orbit;
    return s.find_orbit(other)->lambda;  // lambda == 1 gives the two-fixed-points case
}

PTuple walk_cycle_to_ptuple(const SystemPresentation& s, const std::vector<CycleStep>& cycle,
                            std::size_t start, bool reversed) {
    if (cycle.empty()) throw std::invalid_argument("walk_cycle_to_ptuple: empty cycle");
    std::vector<CycleStep> walk;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        walk.push_back(cycle[(start + i) % cycle.size()]);
    if (reversed) {
        std::reverse(walk.begin(), walk.end());
        for (auto& step : walk) std::swap(step.from, step.to);
    }

    const int l = static_cast<int>(walk.size()) - 1;
    auto connector_of = [&](const std::string& id) -> const ConnectorSpec& {
        for (const auto& c : s.connectors)
            if (c.id == id) return c;
        throw std::invalid_argument("walk_cycle_to_ptuple: unknown connector " + id);
    };

    // The Sigma_p normal form needs the closing connector's backward tail at
    // the final orbit of the walk.
    const ConnectorSpec& closing = connector_of(walk.back().connector);
    if (closing.left.orbit != walk.back().from)
        throw std::invalid_argument("walk_cycle_to_ptuple: closing connector enters forward");

    PTuple p;
    p.l = l;
    for (const auto& step : walk) p.lambdas.push_back(s.find_orbit(step.from)->lambda);

    // Entry anchor a_i at the orbit the step leaves, exit anchor b_i at the
    // orbit it enters; traversal against the connector's own direction is
    // recorded in eps_i.
    std::vector<int> entry(l + 1), exit_(l + 1);
    for (int i = 0; i <= l; ++i) {
        const ConnectorSpec& c = connector_of(walk[i].connector);
        bool along = c.left.orbit == c.right.orbit || c.left.orbit == walk[i].from;
        if (along) {
            entry[i] = c.left.anchor;
            exit_[i] = c.right.anchor;
            if (i < l) p.epsilons.push_back(0);
        } else {
            entry[i] = c.right.anchor;
            exit_[i] = c.left.anchor;
            if (i < l) p.epsilons.push_back(1);
        }
    }

    // Re-anchor the cycle: shift connector base points and orbit labelings so
    // every intermediate connector sits at anchors (0, 0); the residual
    // displacement lands on the closing connector and is the odd offset m.
    long t = 0;  // labeling offset of the current orbit, chained around the walk
    for (int i = 0; i < l; ++i) {
        long shift = t - entry[i];
        t = exit_[i] + shift;
    }
    long closing_shift = t - entry[l];
    long residual = exit_[l] + closing_shift;
    int lambda0 = p.lambdas[0];
    int m = static_cast<int>(((-residual) % lambda0 + lambda0) % lambda0);
    p.m = m;

    if (!p.valid())
        throw std::logic_error("walk_cycle_to_ptuple: extracted tuple invalid: " + p.to_string());
    return p;
}

PTuple extract_p(const SystemPresentation& s) {
    ColoringDecision d = decide_continuous_coloring(s, Kappa::Two);
    if (d.colorable || d.obstruction->kind != Obstruction::Kind::OddConstraintCycle)
        throw PreconditionViolated(
            "extract_p: decide(s, 2) did not produce an odd constraint cycle");
    return walk_cycle_to_ptuple(s, d.obstruction->cycle, 0, false);
}

std::set<PTuple> enumerate_Fp(const PTuple& p, int jobs) {
    if (!p.valid()) throw std::invalid_argument("enumerate_Fp: invalid PTuple");
    int Lambda = *std::max_element(p.lambdas.begin(), p.lambdas.end());

    std::vector<PTuple> box;
    std::vector<int> lambdas(p.l + 1, 2);
    for (;;) {
        for (int m = 1; m < lambdas[0]; m += 2) {
            for (int epsMask = 0; epsMask < (1 << p.l); ++epsMask) {
                PTuple cand;
                cand.l = p.l;
                cand.lambdas = lambdas;
                cand.m = m;
                for (int i = 0; i < p.l; ++i) cand.epsilons.push_back((epsMask >> i) & 1);
                box.push_back(std::move(cand));
            }
        }
        int pos = 0;
        while (pos <= p.l) {
            lambdas[pos] += 2;
            if (lambdas[pos] <= Lambda) break;
            lambdas[pos] = 2;
            ++pos;
        }
        if (pos > p.l) break;
    }

    auto scan = [&p](const std::vector<PTuple>& chunk) {
        std::set<PTuple> found;
        for (const auto& cand : chunk)
            if (sigma_p_equivalent(p, cand)) found.insert(cand);
        return found;
    };

    std::set<PTuple> result;
    if (jobs <= 1) {
        result = scan(box);
    } else {
        std::vector<std::vector<PTuple>> chunks(jobs);
        for (std::size_t i = 0; i < box.size(); ++i) chunks[i % jobs].push_back(box[i]);
        std::vector<std::future<std::set<PTuple>>> futures;
        for (auto& chunk : chunks)
            futures.push_back(std::async(std::launch::async, scan, std::cref(chunk)));
        for (auto& f : futures) result.merge(f.get());
    }
    return result;
}

PTuple canon_p(const PTuple& p, int jobs) {
    std::set<PTuple> family = enumerate_Fp(p, jobs);
    return *family.begin();  // lexicographic minimum
}

BasisElement basis_below(const SystemPresentation& s, BasisMode mode) {
    ColoringDecision d = decide_continuous_coloring(s, Kappa::Two);
    if (d.colorable)
        throw std::invalid_argument("basis_below: input has a continuous 2-coloring");
    const Obstruction& o = *d.obstruction;
    switch (o.kind) {
        case Obstruction::Kind::FixedPointNotOpen:
            if (mode == BasisMode::Homeo) return BasisElement::x1();
            return BasisElement::n_sigma(subshift_fixed_case(s));
        case Obstruction::Kind::OddFiniteOrbit:
            return BasisElement::odd_cycle((o.length - 3) / 2);
        case Obstruction::Kind::OddConstraintCycle:
            return BasisElement::sigma_p(canon_p(extract_p(s)));
        default:
            throw std::logic_error("basis_below: unexpected obstruction");
    }
}

}  // namespace rank2
