#include "rank2/order.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace rank2 {

namespace {

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

struct HomSearcher {
    const FiniteGraph& g;
    const FiniteGraph& h;
    bool injective;
    long budget;
    long nodes = 0;
    std::vector<std::vector<int>> gAdj, hAdj;
    std::vector<std::vector<char>> hEdge;
    std::vector<int> order;       // g vertices, degree desc then label
    std::vector<int> image;       // g vertex -> h vertex or -1
    std::vector<char> used;       // h vertex occupied (injective mode)

    HomSearcher(const FiniteGraph& g_, const FiniteGraph& h_, bool injective_, long budget_)
        : g(g_), h(h_), injective(injective_), budget(budget_) {
        gAdj = g.adjacency();
        hAdj = h.adjacency();
        hEdge.assign(h.vertices.size(), std::vector<char>(h.vertices.size(), 0));
        for (auto [a, b] : h.edges) hEdge[a][b] = hEdge[b][a] = 1;
        order.resize(g.vertices.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (gAdj[a].size() != gAdj[b].size()) return gAdj[a].size() > gAdj[b].size();
            return g.vertices[a] < g.vertices[b];
        });
        image.assign(g.vertices.size(), -1);
        used.assign(h.vertices.size(), 0);
    }

    SearchStatus run() {
        if (injective && g.vertices.size() > h.vertices.size()) return SearchStatus::Exhausted;
        return place(0);
    }

    SearchStatus place(std::size_t pos) {
        if (++nodes > budget) return SearchStatus::Budget;
        if (pos == order.size()) return SearchStatus::Found;
        int v = order[pos];
        for (int cand = 0; cand < static_cast<int>(h.vertices.size()); ++cand) {
            if (injective && used[cand]) continue;
            if (injective && hAdj[cand].size() < gAdj[v].size()) continue;
            bool ok = true;
            for (int nb : gAdj[v]) {
                if (image[nb] != -1 && !hEdge[cand][image[nb]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = cand;
            if (injective) used[cand] = 1;
            SearchStatus sub = place(pos + 1);
            if (sub != SearchStatus::Exhausted) return sub;
            image[v] = -1;
            if (injective) used[cand] = 0;
        }
        return SearchStatus::Exhausted;
    }
};

HomSearchResult run_hom_search(const FiniteGraph& g, const FiniteGraph& h, bool injective,
                               long budget) {
    HomSearcher searcher(g, h, injective, budget);
    HomSearchResult res;
    res.status = searcher.run();
    res.nodes = searcher.nodes;
    if (res.status == SearchStatus::Found) {
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            res.map[g.vertices[v]] = h.vertices[searcher.image[v]];
    }
    return res;
}

}  // namespace

HomSearchResult injective_hom_exists(const FiniteGraph& g, const FiniteGraph& h,
                                     long nodeBudget) {
    return run_hom_search(g, h, true, nodeBudget);
}

HomSearchResult graph_hom_exists(const FiniteGraph& g, const FiniteGraph& h, long nodeBudget) {
    return run_hom_search(g, h, false, nodeBudget);
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Below: return "Below";
        case Relation::Above: return "Above";
        case Relation::Equivalent: return "Equivalent";
        case Relation::Incomparable: return "Incomparable";
    }
    return "?";
}

std::string refutation_reason_name(RefutationReason r) {
    switch (r) {
        case RefutationReason::SizeMismatch: return "SizeMismatch";
        case RefutationReason::OrbitCountMismatch: return "OrbitCountMismatch";
        case RefutationReason::ColoringSeparation: return "ColoringSeparation";
        case RefutationReason::ForcedContradiction: return "ForcedContradiction";
        case RefutationReason::ExhaustiveSearch: return "ExhaustiveSearch";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Structural isomorphism

namespace {

// Orbit-to-orbit map: x -> dir*x + off (mod lambda).  For lambda <= 2 the
// reflection form coincides with a rotation, so dir is normalized to +1.
struct OrbitMap {
    std::string target;
    int dir = 1;
    int off = 0;

    static OrbitMap make(std::string target, int dir, int off, int lambda) {
        OrbitMap m;
        m.target = std::move(target);
        m.off = mod(off, lambda);
        m.dir = (lambda <= 2) ? 1 : dir;
        if (lambda <= 2 && dir == -1) m.off = mod(-m.off, lambda);
        return m;
    }

    bool operator==(const OrbitMap&) const = default;
};

struct IsoSearcher {
    const SystemPresentation& a;
    const SystemPresentation& b;
    std::map<std::string, int> lamA, lamB;
    std::map<std::string, OrbitMap> orbitMap;  // a orbit -> assignment
    std::set<std::string> usedOrbits;          // b orbits already taken
    std::vector<char> usedConnectors;

    IsoSearcher(const SystemPresentation& a_, const SystemPresentation& b_) : a(a_), b(b_) {
        for (const auto& o : a.orbits) lamA[o.id] = o.lambda;
        for (const auto& o : b.orbits) lamB[o.id] = o.lambda;
        usedConnectors.assign(b.connectors.size(), 0);
    }

    bool assign(const std::string& src, const OrbitMap& m) {
        auto it = orbitMap.find(src);
        if (it != orbitMap.end()) return it->second == m;
        if (usedOrbits.count(m.target)) return false;  // injectivity on orbits
        orbitMap.emplace(src, m);
        usedOrbits.insert(m.target);
        return true;
    }

    void unassign(const std::string& src, bool wasNew) {
        if (!wasNew) return;
        usedOrbits.erase(orbitMap.at(src).target);
        orbitMap.erase(src);
    }

    bool kind_lambda_match(const std::string& srcOrbit, const std::string& dstOrbit) const {
        const PeriodicOrbitSpec* src = a.find_orbit(srcOrbit);
        const PeriodicOrbitSpec* dst = b.find_orbit(dstOrbit);
        return src && dst && src->kind == dst->kind && src->lambda == dst->lambda;
    }

    bool match_connectors(std::size_t idx) {
        if (idx == a.connectors.size()) return finish();
        const ConnectorSpec& c = a.connectors[idx];
        int lamLeft = lamA.at(c.left.orbit);
        int lamRight = lamA.at(c.right.orbit);
        for (std::size_t j = 0; j < b.connectors.size(); ++j) {
            if (usedConnectors[j]) continue;
            const ConnectorSpec& d = b.connectors[j];
            for (int dir : {1, -1}) {
                // Image of sigma^k(z_c) is sigma^{dir*k + s}(z_d).  The
                // backward tail lands on d's left end when dir=+1 and on its
                // right end when dir=-1.
                const TailAnchor& backEnd = (dir == 1) ? d.left : d.right;
                const TailAnchor& fwdEnd = (dir == 1) ? d.right : d.left;
                if (!kind_lambda_match(c.left.orbit, backEnd.orbit)) continue;
                if (!kind_lambda_match(c.right.orbit, fwdEnd.orbit)) continue;
                int span = std::lcm(lamLeft, lamRight);
                for (int s = 0; s < span; ++s) {
                    OrbitMap mLeft =
                        dir == 1 ? OrbitMap::make(backEnd.orbit, 1,
                                                  backEnd.anchor + s - c.left.anchor, lamLeft)
                                 : OrbitMap::make(backEnd.orbit, -1,
                                                  backEnd.anchor + s + c.left.anchor, lamLeft);
                    OrbitMap mRight =
                        dir == 1 ? OrbitMap::make(fwdEnd.orbit, 1,
                                                  fwdEnd.anchor + s - c.right.anchor, lamRight)
                                 : OrbitMap::make(fwdEnd.orbit, -1,
                                                  fwdEnd.anchor + s + c.right.anchor, lamRight);
                    bool newLeft = !orbitMap.count(c.left.orbit);
                    if (!assign(c.left.orbit, mLeft)) continue;
                    bool selfPair = c.left.orbit == c.right.orbit;
                    bool newRight = !selfPair && !orbitMap.count(c.right.orbit);
                    bool okRight = selfPair ? orbitMap.at(c.left.orbit) == mRight
                                            : assign(c.right.orbit, mRight);
                    if (okRight) {
                        usedConnectors[j] = 1;
                        if (match_connectors(idx + 1)) return true;
                        usedConnectors[j] = 0;
                    }
                    if (!selfPair && okRight) unassign(c.right.orbit, newRight);
                    unassign(c.left.orbit, newLeft);
                }
            }
        }
        return false;
    }

    bool finish() {
        // Orbits untouched by connectors: try every kind/length-preserving
        // assignment of the leftovers, then compare family multisets under
        // the completed orbit map.
        std::vector<const PeriodicOrbitSpec*> restA;
        std::vector<const PeriodicOrbitSpec*> restB;
        for (const auto& o : a.orbits)
            if (!orbitMap.count(o.id)) restA.push_back(&o);
        for (const auto& o : b.orbits)
            if (!usedOrbits.count(o.id)) restB.push_back(&o);
        if (restA.size() != restB.size()) return false;
        return assign_leftovers(restA, restB, 0);
    }

    bool assign_leftovers(std::vector<const PeriodicOrbitSpec*>& restA,
                          std::vector<const PeriodicOrbitSpec*>& restB, std::size_t idx) {
        if (idx == restA.size()) return families_match();
        for (auto*& candidate : restB) {
            if (!candidate) continue;
            if (candidate->kind != restA[idx]->kind || candidate->lambda != restA[idx]->lambda)
                continue;
            const PeriodicOrbitSpec* taken = candidate;
            orbitMap.emplace(restA[idx]->id, OrbitMap{taken->id, 1, 0});
            candidate = nullptr;
            if (assign_leftovers(restA, restB, idx + 1)) {
                candidate = taken;  // restore; the caller only needs the verdict
                orbitMap.erase(restA[idx]->id);
                return true;
            }
            candidate = taken;
            orbitMap.erase(restA[idx]->id);
        }
        return false;
    }

    bool families_match() const {
        std::vector<std::pair<int, std::string>> famA, famB;
        for (const auto& f : a.families) famA.push_back({f.size, orbitMap.at(f.limit).target});
        for (const auto& f : b.families) famB.push_back({f.size, f.limit});
        std::sort(famA.begin(), famA.end());
        std::sort(famB.begin(), famB.end());
        return famA == famB;
    }
};

}  // namespace

bool presentation_isomorphic(const SystemPresentation& a, const SystemPresentation& b) {
    require_valid(a, "presentation_isomorphic");
    require_valid(b, "presentation_isomorphic");
    if (a.orbits.size() != b.orbits.size()) return false;
    if (a.connectors.size() != b.connectors.size()) return false;
    if (a.families.size() != b.families.size()) return false;
    auto profile = [](const SystemPresentation& s) {
        std::vector<std::pair<int, int>> prof;  // (kind, lambda) multiset
        for (const auto& o : s.orbits)
            prof.push_back({o.kind == OrbitKind::Limit ? 0 : 1, o.lambda});
        std::sort(prof.begin(), prof.end());
        return prof;
    };
    if (profile(a) != profile(b)) return false;
    IsoSearcher searcher(a, b);
    return searcher.match_connectors(0);
}

bool sigma_p_equivalent(const PTuple& p, const PTuple& q) {
    if (!p.valid() || !q.valid())
        throw std::invalid_argument("sigma_p_equivalent: invalid PTuple");
    if (p.l != q.l) return false;
    std::vector<int> lp = p.lambdas, lq = q.lambdas;
    std::sort(lp.begin(), lp.end());
    std::sort(lq.begin(), lq.end());
    if (lp != lq) return false;
    if (p == q) return true;
    return presentation_isomorphic(make_sigma_p(p), make_sigma_p(q));
}

// ---------------------------------------------------------------------------
// Canonical comparison table

namespace {

DirectionEvidence embeds_evidence(std::string note) {
    DirectionEvidence e;
    e.embeds = true;
    e.note = std::move(note);
    return e;
}

DirectionEvidence refuted(RefutationReason reason, std::string note) {
    DirectionEvidence e;
    e.embeds = false;
    e.reason = reason;
    e.note = std::move(note);
    return e;
}

// Evidence for "a embeds into b" over the canonical families.
DirectionEvidence direction_evidence(const BasisElement& a, const BasisElement& b) {
    using Tag = BasisElement::Tag;

    if (a.tag == Tag::OddCycle && b.tag == Tag::OddCycle) {
        if (a.q == b.q) return embeds_evidence("identity");
        if (a.q > b.q)
            return refuted(RefutationReason::SizeMismatch,
                           "no injection of " + std::to_string(2 * a.q + 3) + " points into " +
                               std::to_string(2 * b.q + 3));
        FiniteGraph ga = truncate(make_odd_cycle(a.q), 1);
        FiniteGraph gb = truncate(make_odd_cycle(b.q), 1);
        HomSearchResult r = injective_hom_exists(ga, gb);
        assert(r.status == SearchStatus::Exhausted);
        return refuted(RefutationReason::ExhaustiveSearch,
                       "exhaustive search: a shorter odd cycle admits no homomorphism into a "
                       "longer one (" + std::to_string(r.nodes) + " nodes)");
    }
    if (a.tag == Tag::OddCycle)
        return refuted(RefutationReason::ColoringSeparation,
                       "the target graph is bipartite (contains no odd cycle); an odd cycle has "
                       "no 2-coloring at all");
    if (b.tag == Tag::OddCycle)
        return refuted(RefutationReason::SizeMismatch,
                       "an infinite space cannot inject into a finite one");

    if (a.tag == b.tag) {
        switch (a.tag) {
            case Tag::X1:
                return embeds_evidence("identity");
            case Tag::NSigma:
                if (a.n == b.n) return embeds_evidence("identity");
                if (a.n == 0)
                    return refuted(RefutationReason::ForcedContradiction,
                                   "both tails of the dense orbit converge to the same fixed "
                                   "point; the image orbit's two-sided limits would coincide");
                if (a.n == 1 && b.n >= 2)
                    return refuted(RefutationReason::ForcedContradiction,
                                   "both tails of the dense orbit converge; the image orbit has "
                                   "a non-convergent tail");
                return refuted(RefutationReason::OrbitCountMismatch,
                               "finite orbits map onto orbits of the same size; the target has "
                               "no matching orbit sizes");
            case Tag::SigmaP:
                if (sigma_p_equivalent(a.p, b.p))
                    return embeds_evidence("structural isomorphism of presentations");
                {
                    std::vector<int> la = a.p.lambdas, lb = b.p.lambdas;
                    std::sort(la.begin(), la.end());
                    std::sort(lb.begin(), lb.end());
                    if (a.p.l != b.p.l || la != lb)
                        return refuted(RefutationReason::OrbitCountMismatch,
                                       "orbit counts or orbit sizes differ; orbits map onto "
                                       "orbits of the same size under minimality");
                }
                return refuted(RefutationReason::ExhaustiveSearch,
                               "structural isomorphism search exhausted: anchor structure "
                               "differs");
            default:
                break;
        }
    }

    if (a.tag == Tag::X1 && b.tag == Tag::NSigma)
        return refuted(RefutationReason::OrbitCountMismatch,
                       "under orbit preservation the omega family of 2-point orbits needs "
                       "infinitely many disjoint 2-point orbit images; the target has finitely "
                       "many finite orbits");
    if (a.tag == Tag::NSigma && b.tag == Tag::X1)
        return refuted(RefutationReason::OrbitCountMismatch,
                       "the dense infinite orbit must map onto an infinite orbit; X1 has orbits "
                       "of size at most two");
    if (a.tag == Tag::X1 && b.tag == Tag::SigmaP)
        return refuted(RefutationReason::ColoringSeparation,
                       "the target has a continuous aleph_0-coloring; X1 has none");
    if (a.tag == Tag::SigmaP && b.tag == Tag::X1)
        return refuted(RefutationReason::OrbitCountMismatch,
                       "the infinite orbits must map onto infinite orbits; X1 has orbits of "
                       "size at most two");
    if (a.tag == Tag::NSigma && b.tag == Tag::SigmaP)
        return refuted(RefutationReason::ColoringSeparation,
                       "the target has a continuous aleph_0-coloring; nSigma with n = 1 or n "
                       "even has none");
    if (a.tag == Tag::SigmaP && b.tag == Tag::NSigma)
        return refuted(RefutationReason::ColoringSeparation,
                       "the image would avoid the target's fixed points, giving a continuous "
                       "2-coloring of a compact fixed-point-free subsystem; the source has "
                       "none");

    throw std::logic_error("direction_evidence: unhandled pair");
}

}  // namespace

ComparisonVerdict compare_canonical(const BasisElement& a, const BasisElement& b) {
    // fold hand-built NSigma(2q+3) values into their odd-cycle form
    BasisElement na = a.tag == BasisElement::Tag::NSigma ? BasisElement::n_sigma(a.n) : a;
    BasisElement nb = b.tag == BasisElement::Tag::NSigma ? BasisElement::n_sigma(b.n) : b;
    ComparisonVerdict v;
    v.forward = direction_evidence(na, nb);
    v.backward = direction_evidence(nb, na);
    if (v.forward.embeds && v.backward.embeds)
        v.relation = Relation::Equivalent;
    else if (v.forward.embeds)
        v.relation = Relation::Below;
    else if (v.backward.embeds)
        v.relation = Relation::Above;
    else
        v.relation = Relation::Incomparable;
    return v;
}

// ---------------------------------------------------------------------------
// Truncation-level refutation search

namespace {

struct FiniteOrbitComp {
    std::string label;    // orbit id or family member tag
    int size = 0;
    bool isLimit = false;
    std::string orbitId;  // nonempty when this is a named periodic orbit
};

struct WindowComp {
    std::string id;
    std::string leftOrbit;
    int leftAnchor = 0;
    std::string rightOrbit;
    int rightAnchor = 0;
};

struct RefuteSearcher {
    const SystemPresentation& a;
    const SystemPresentation& b;
    int N, M;
    long budget;
    long nodes = 0;

    std::vector<FiniteOrbitComp> aOrbits;
    std::vector<WindowComp> aWindows;
    std::vector<FiniteOrbitComp> bOrbits;
    std::vector<WindowComp> bWindows;
    std::map<std::string, int> bLambda;

    std::map<std::string, OrbitMap> orbitAssign;      // a named orbit -> map into b orbit
    std::set<std::string> usedBOrbitTargets;          // b finite-orbit components taken
    std::map<std::string, std::set<int>> windowBusy;  // b window id -> occupied offsets
    std::map<std::string, std::set<int>> ringBusy;    // b orbit id -> positions taken by windows
    std::vector<std::string> placements;

    RefuteSearcher(const SystemPresentation& a_, const SystemPresentation& b_, int N_, int M_,
                   long budget_)
        : a(a_), b(b_), N(N_), M(M_), budget(budget_) {
        for (const auto& o : a.orbits)
            aOrbits.push_back({o.id, o.lambda, o.kind == OrbitKind::Limit, o.id});
        for (const auto& f : a.families)
            for (int n = 0; n < N; ++n)
                aOrbits.push_back({f.id + "#" + std::to_string(n), f.size, false, ""});
        for (const auto& c : a.connectors)
            aWindows.push_back({c.id, c.left.orbit, c.left.anchor, c.right.orbit, c.right.anchor});
        for (const auto& o : b.orbits) {
            bOrbits.push_back({o.id, o.lambda, o.kind == OrbitKind::Limit, o.id});
            bLambda[o.id] = o.lambda;
        }
        for (const auto& f : b.families)
            for (int n = 0; n < M; ++n)
                bOrbits.push_back({f.id + "#" + std::to_string(n), f.size, false, ""});
        for (const auto& c : b.connectors)
            bWindows.push_back({c.id, c.left.orbit, c.left.anchor, c.right.orbit, c.right.anchor});
    }

    bool consistent_orbit_assign(const std::string& src, const OrbitMap& m, bool* inserted) {
        auto it = orbitAssign.find(src);
        if (it != orbitAssign.end()) {
            *inserted = false;
            return it->second == m;
        }
        for (const auto& [other, om] : orbitAssign)
            if (other != src && om.target == m.target) return false;
        orbitAssign.emplace(src, m);
        *inserted = true;
        return true;
    }

    SearchStatus search_orbit(std::size_t idx);
    SearchStatus search_window(std::size_t idx);
    SearchStatus done() { return SearchStatus::Found; }
};

SearchStatus RefuteSearcher::search_orbit(std::size_t idx) {
    if (++nodes > budget) return SearchStatus::Budget;
    if (idx == aOrbits.size()) return search_window(0);
    const FiniteOrbitComp& src = aOrbits[idx];
    for (const auto& dst : bOrbits) {
        if (dst.size != src.size) continue;
        if (src.isLimit && !dst.isLimit) continue;
        if (usedBOrbitTargets.count(dst.label)) continue;

        // Rotations and directions only matter when windows can later demand
        // a specific map: both ends named periodic orbits.
        bool named = !src.orbitId.empty() && !dst.orbitId.empty();
        int dirs = named && src.size >= 3 ? 2 : 1;
        int rots = named ? src.size : 1;
        for (int di = 0; di < dirs; ++di) {
            int dir = di == 0 ? 1 : -1;
            for (int t = 0; t < rots; ++t) {
                bool inserted = false;
                if (named) {
                    OrbitMap m = OrbitMap::make(dst.orbitId, dir, t, src.size);
                    if (!consistent_orbit_assign(src.orbitId, m, &inserted)) continue;
                } else if (!src.orbitId.empty()) {
                    // Named a-orbit onto an anonymous family member: record a
                    // sentinel target so window closures can never unify.
                    OrbitMap m = OrbitMap::make("member " + dst.label, 1, 0, src.size);
                    if (!consistent_orbit_assign(src.orbitId, m, &inserted)) continue;
                }
                usedBOrbitTargets.insert(dst.label);
                placements.push_back(src.label + " -> " + dst.label + " (dir " +
                                     std::to_string(dir) + ", t=" + std::to_string(t) + ")");
                SearchStatus sub = search_orbit(idx + 1);
                if (sub == SearchStatus::Found) return sub;
                placements.pop_back();
                usedBOrbitTargets.erase(dst.label);
                if (inserted) orbitAssign.erase(src.orbitId);
                if (sub == SearchStatus::Budget) return sub;
            }
        }
    }
    return SearchStatus::Exhausted;
}

SearchStatus RefuteSearcher::search_window(std::size_t idx) {
    if (++nodes > budget) return SearchStatus::Budget;
    if (idx == aWindows.size()) return done();
    const WindowComp& src = aWindows[idx];
    int lamL = 0, lamR = 0;
    for (const auto& o : a.orbits) {
        if (o.id == src.leftOrbit) lamL = o.lambda;
        if (o.id == src.rightOrbit) lamR = o.lambda;
    }

    // Placement into a window of b.
    for (const auto& dst : bWindows) {
        for (int dir : {1, -1}) {
            const std::string& backOrbit = dir == 1 ? dst.leftOrbit : dst.rightOrbit;
            const std::string& fwdOrbit = dir == 1 ? dst.rightOrbit : dst.leftOrbit;
            int backAnchor = dir == 1 ? dst.leftAnchor : dst.rightAnchor;
            int fwdAnchor = dir == 1 ? dst.rightAnchor : dst.leftAnchor;
            if (bLambda.at(backOrbit) != lamL || bLambda.at(fwdOrbit) != lamR) continue;
            for (int t = -(M - N); t <= M - N; ++t) {
                bool overlap = false;
                auto& busy = windowBusy[dst.id];
                for (int k = -N; k <= N && !overlap; ++k)
                    if (busy.count(dir * k + t)) overlap = true;
                if (overlap) continue;

                OrbitMap mL = dir == 1
                                  ? OrbitMap::make(backOrbit, 1, backAnchor + t - src.leftAnchor,
                                                   lamL)
                                  : OrbitMap::make(backOrbit, -1, backAnchor + t + src.leftAnchor,
                                                   lamL);
                OrbitMap mR = dir == 1
                                  ? OrbitMap::make(fwdOrbit, 1, fwdAnchor + t - src.rightAnchor,
                                                   lamR)
                                  : OrbitMap::make(fwdOrbit, -1, fwdAnchor + t + src.rightAnchor,
                                                   lamR);
                bool insL = false, insR = false;
                if (!consistent_orbit_assign(src.leftOrbit, mL, &insL)) continue;
                bool okR = src.leftOrbit == src.rightOrbit
                               ? orbitAssign.at(src.leftOrbit) == mR
                               : consistent_orbit_assign(src.rightOrbit, mR, &insR);
                if (okR) {
                    for (int k = -N; k <= N; ++k) busy.insert(dir * k + t);
                    placements.push_back(src.id + " -> window " + dst.id + " (dir " +
                                         std::to_string(dir) + ", t=" + std::to_string(t) + ")");
                    SearchStatus sub = search_window(idx + 1);
                    if (sub == SearchStatus::Found) return sub;
                    placements.pop_back();
                    for (int k = -N; k <= N; ++k) busy.erase(dir * k + t);
                    if (insR) orbitAssign.erase(src.rightOrbit);
                    if (insL) orbitAssign.erase(src.leftOrbit);
                    if (sub == SearchStatus::Budget) return sub;
                } else {
                    if (insL) orbitAssign.erase(src.leftOrbit);
                }
            }
        }
    }

    // Placement wrapping around a large limit orbit of b; only a self
    // connector can close up consistently.
    if (src.leftOrbit == src.rightOrbit) {
        for (const auto& dst : bOrbits) {
            if (dst.orbitId.empty() || !dst.isLimit) continue;
            int lamO = dst.size;
            if (lamO != lamL || lamO < 2 * N + 1) continue;
            if (usedBOrbitTargets.count(dst.label)) continue;
            for (int dir : {1, -1}) {
                if (mod(dir * src.leftAnchor - dir * src.rightAnchor, lamO) != 0) continue;
                for (int t = 0; t < lamO; ++t) {
                    auto& busy = ringBusy[dst.orbitId];
                    bool overlap = false;
                    for (int k = -N; k <= N && !overlap; ++k)
                        if (busy.count(mod(dir * k + t, lamO))) overlap = true;
                    if (overlap) continue;
                    OrbitMap m = OrbitMap::make(dst.orbitId, dir, t - dir * src.leftAnchor, lamO);
                    bool ins = false;
                    if (!consistent_orbit_assign(src.leftOrbit, m, &ins)) continue;
                    for (int k = -N; k <= N; ++k) busy.insert(mod(dir * k + t, lamO));
                    placements.push_back(src.id + " -> orbit ring " + dst.orbitId);
                    SearchStatus sub = search_window(idx + 1);
                    if (sub == SearchStatus::Found) return sub;
                    placements.pop_back();
                    for (int k = -N; k <= N; ++k) busy.erase(mod(dir * k + t, lamO));
                    if (ins) orbitAssign.erase(src.leftOrbit);
                    if (sub == SearchStatus::Budget) return sub;
                }
            }
        }
    }

    return SearchStatus::Exhausted;
}

}  // namespace

RefuteResult truncation_refutes(const SystemPresentation& a, const SystemPresentation& b, int N,
                                int slack, long nodeBudget) {
    require_valid(a, "truncation_refutes");
    require_valid(b, "truncation_refutes");
    if (N < 1) throw std::invalid_argument("truncation_refutes: N must be >= 1");
    if (slack < 0) slack = N;
    RefuteSearcher searcher(a, b, N, N + slack, nodeBudget);
    RefuteResult res;
    res.status = searcher.search_orbit(0);
    res.nodes = searcher.nodes;
    if (res.status == SearchStatus::Found) {
        res.refuted = false;
        res.placements = searcher.placements;
    } else if (res.status == SearchStatus::Exhausted) {
        res.refuted = true;
    }
    return res;
}

}  // namespace rank2
