#include "rank2/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace rank2 {

namespace {

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

int par(int a) { return mod(a, 2); }

struct OrbitInfo {
    int lambda = 0;
    OrbitKind kind = OrbitKind::Isolated;
};

std::map<std::string, OrbitInfo> orbit_table(const SystemPresentation& s) {
    std::map<std::string, OrbitInfo> t;
    for (const auto& o : s.orbits) t[o.id] = {o.lambda, o.kind};
    return t;
}

// Orbit point pattern used by the Palette witness: parity alternation with a
// third color on the wrap point of odd orbits.
int palette_pattern(int lambda, int i) {
    i = mod(i, lambda);
    if (lambda % 2 == 1 && lambda >= 3 && i == lambda - 1) return 2;
    return par(i);
}

}  // namespace

std::string kappa_name(Kappa k) {
    switch (k) {
        case Kappa::Zero: return "0";
        case Kappa::One: return "1";
        case Kappa::Two: return "2";
        case Kappa::Three: return "3";
        case Kappa::Aleph0: return "inf";
    }
    return "?";
}

std::vector<std::string> Obstruction::cycle_connectors() const {
    std::vector<std::string> ids;
    ids.reserve(cycle.size());
    for (const auto& step : cycle) ids.push_back(step.connector);
    return ids;
}

ParityConstraintSystem constraint_system(const SystemPresentation& s) {
    require_valid(s, "constraint_system");
    ParityConstraintSystem sys;
    for (const auto& o : s.orbits) {
        if (o.kind == OrbitKind::Limit) {
            if (o.lambda == 1)
                throw PreconditionViolated("constraint_system: fixed limit orbit " + o.id);
            if (o.lambda % 2 != 0)
                throw PreconditionViolated("constraint_system: odd limit orbit " + o.id);
            sys.variables.push_back(o.id);
        } else {
            if (o.lambda >= 3 && o.lambda % 2 == 1)
                throw PreconditionViolated("constraint_system: odd finite orbit " + o.id);
            throw PreconditionViolated("constraint_system: removable isolated orbit " + o.id +
                                       " not stripped");
        }
    }
    if (!s.families.empty())
        throw PreconditionViolated("constraint_system: family " + s.families.front().id +
                                   " not stripped");
    for (const auto& c : s.connectors) {
        XorEquation eq;
        eq.left = c.left.orbit;
        eq.right = c.right.orbit;
        eq.parity = par(c.left.anchor + c.right.anchor);
        eq.connector = c.id;
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

bool xor_system_consistent(const ParityConstraintSystem& sys,
                           std::map<std::string, int>* solution,
                           std::vector<CycleStep>* cycle) {
    struct HalfEdge {
        std::string other;
        int parity;
        std::string connector;
    };
    std::map<std::string, std::vector<HalfEdge>> adj;
    for (const auto& v : sys.variables) adj[v];
    for (const auto& eq : sys.equations) {
        if (eq.left != eq.right) {
            adj[eq.left].push_back({eq.right, eq.parity, eq.connector});
            adj[eq.right].push_back({eq.left, eq.parity, eq.connector});
        }
    }
    for (auto& [v, edges] : adj) {
        std::sort(edges.begin(), edges.end(), [](const HalfEdge& a, const HalfEdge& b) {
            return std::tie(a.connector, a.other) < std::tie(b.connector, b.other);
        });
    }

    std::map<std::string, int> pot;
    std::map<std::string, int> depth;
    struct ParentLink {
        std::string parent;
        std::string connector;
    };
    std::map<std::string, ParentLink> parent;

    for (const auto& root : sys.variables) {
        if (pot.count(root)) continue;
        pot[root] = 0;
        depth[root] = 0;
        std::deque<std::string> queue{root};
        while (!queue.empty()) {
            std::string u = queue.front();
            queue.pop_front();
            for (const auto& he : adj[u]) {
                if (pot.count(he.other)) continue;
                pot[he.other] = pot[u] ^ he.parity;
                depth[he.other] = depth[u] + 1;
                parent[he.other] = {u, he.connector};
                queue.push_back(he.other);
            }
        }
    }

    std::vector<const XorEquation*> violating;
    for (const auto& eq : sys.equations)
        if ((pot[eq.left] ^ pot[eq.right]) != eq.parity) violating.push_back(&eq);

    if (violating.empty()) {
        if (solution) *solution = pot;
        return true;
    }
    if (!cycle) return false;

    std::vector<CycleStep> best;
    for (const XorEquation* eq : violating) {
        std::vector<CycleStep> walk;
        if (eq->left == eq->right) {
            walk.push_back({eq->connector, eq->left, eq->right});
        } else {
            // ascend to the common ancestor
            std::string u = eq->left, v = eq->right;
            std::vector<std::string> up_u{u}, up_v{v};
            while (u != v) {
                if (depth[u] >= depth[v]) {
                    u = parent[u].parent;
                    up_u.push_back(u);
                } else {
                    v = parent[v].parent;
                    up_v.push_back(v);
                }
            }
            // walk: right -> lca -> left, then the violating connector closes it
            for (std::size_t i = 0; i + 1 < up_v.size(); ++i)
                walk.push_back({parent[up_v[i]].connector, up_v[i], up_v[i + 1]});
            for (std::size_t i = up_u.size(); i-- > 1;)
                walk.push_back({parent[up_u[i - 1]].connector, up_u[i], up_u[i - 1]});
            walk.push_back({eq->connector, eq->left, eq->right});
        }
        auto key = [](const std::vector<CycleStep>& w) {
            std::vector<std::string> ids;
            for (const auto& st : w) ids.push_back(st.connector);
            return std::make_pair(w.size(), ids);
        };
        if (best.empty() || key(walk) < key(best)) best = walk;
    }
    *cycle = best;
    return false;
}

namespace {

ColoringDecision colorable_with(Witness w) {
    ColoringDecision d;
    d.colorable = true;
    d.witness = std::move(w);
    return d;
}

ColoringDecision not_colorable(Obstruction o) {
    ColoringDecision d;
    d.colorable = false;
    d.obstruction = std::move(o);
    return d;
}

// Smallest odd finite orbit of length >= 3: limit orbits, isolated orbits and
// family member orbits all count.
std::optional<std::pair<int, std::string>> smallest_odd_finite_orbit(const SystemPresentation& s) {
    std::optional<std::pair<int, std::string>> best;
    auto offer = [&](int length, const std::string& id) {
        if (length < 3 || length % 2 == 0) return;
        std::pair<int, std::string> cand{length, id};
        if (!best || cand < *best) best = cand;
    };
    for (const auto& o : s.orbits) offer(o.lambda, o.id);
    for (const auto& f : s.families) offer(f.size, f.id);
    return best;
}

}  // namespace

ColoringDecision decide_continuous_coloring(const SystemPresentation& s, Kappa kappa) {
    require_valid(s, "decide_continuous_coloring");

    if (kappa == Kappa::Zero) {
        if (s.empty()) return colorable_with({Witness::Kind::Empty, {}});
        Obstruction o;
        o.kind = Obstruction::Kind::NonemptySpace;
        o.id = s.orbits.front().id;
        return not_colorable(std::move(o));
    }

    if (kappa == Kappa::One) {
        for (const auto& o : s.orbits)
            if (o.lambda >= 2)
                return not_colorable({Obstruction::Kind::EdgePresent, o.id, o.lambda, {}});
        if (!s.connectors.empty())
            return not_colorable(
                {Obstruction::Kind::EdgePresent, s.connectors.front().id, 0, {}});
        if (!s.families.empty())
            return not_colorable({Obstruction::Kind::EdgePresent, s.families.front().id,
                                  s.families.front().size, {}});
        return colorable_with({Witness::Kind::Constant, {}});
    }

    FixedPointReport fp = fixed_point_set(s);
    if (kappa == Kappa::Three || kappa == Kappa::Aleph0) {
        if (fp.isOpen) return colorable_with({Witness::Kind::Palette, {}});
        return not_colorable(
            {Obstruction::Kind::FixedPointNotOpen, *fp.fixedLimitOrbits.begin(), 1, {}});
    }

    // kappa == 2
    if (!fp.isOpen)
        return not_colorable(
            {Obstruction::Kind::FixedPointNotOpen, *fp.fixedLimitOrbits.begin(), 1, {}});

    SystemPresentation reduced = remove_removables(s);
    if (auto odd = smallest_odd_finite_orbit(reduced))
        return not_colorable({Obstruction::Kind::OddFiniteOrbit, odd->second, odd->first, {}});

    ParityConstraintSystem sys = constraint_system(reduced);
    std::map<std::string, int> solution;
    std::vector<CycleStep> cycle;
    if (xor_system_consistent(sys, &solution, &cycle)) {
        Witness w;
        w.kind = Witness::Kind::TwoColor;
        w.orientations = std::move(solution);
        return colorable_with(std::move(w));
    }
    Obstruction o;
    o.kind = Obstruction::Kind::OddConstraintCycle;
    o.cycle = std::move(cycle);
    return not_colorable(std::move(o));
}

namespace {

// Evaluates the witness rule at any truncation vertex.
struct WitnessColorer {
    const SystemPresentation& s;
    const Witness& w;
    std::map<std::string, OrbitInfo> orbits;

    WitnessColorer(const SystemPresentation& s_, const Witness& w_)
        : s(s_), w(w_), orbits(orbit_table(s_)) {}

    int orientation(const std::string& orbitId) const {
        auto it = w.orientations.find(orbitId);
        return it == w.orientations.end() ? 0 : it->second;
    }

    int orbit_color(const std::string& orbitId, int i) const {
        const OrbitInfo& o = orbits.at(orbitId);
        if (w.kind == Witness::Kind::Palette) return palette_pattern(o.lambda, i);
        return orientation(orbitId) ^ par(mod(i, o.lambda));
    }

    int family_color(const FamilySpec& f, int i) const {
        if (w.kind == Witness::Kind::Palette) return palette_pattern(f.size, i);
        return par(mod(i, f.size));
    }

    int connector_color(const ConnectorSpec& c, int k) const {
        if (w.kind == Witness::Kind::Palette) {
            if (k <= 0) return orbit_color(c.left.orbit, c.left.anchor + k);
            if (k >= 2) return orbit_color(c.right.orbit, c.right.anchor + k);
            int before = orbit_color(c.left.orbit, c.left.anchor);
            int after = orbit_color(c.right.orbit, c.right.anchor + 2);
            for (int col = 0; col < 3; ++col)
                if (col != before && col != after) return col;
            return 0;  // unreachable with three colors
        }
        return orientation(c.left.orbit) ^ par(c.left.anchor + k);
    }
};

}  // namespace

bool verify_witness(const SystemPresentation& s, const Witness& w, int N) {
    require_valid(s, "verify_witness");
    if (N < 1) throw std::invalid_argument("verify_witness: N must be >= 1");
    WitnessColorer colorer(s, w);

    FiniteGraph g = truncate(s, N);
    std::map<std::string, int> color;
    for (const auto& o : s.orbits)
        for (int i = 0; i < o.lambda; ++i)
            color[orbit_point_label(o.id, i)] = colorer.orbit_color(o.id, i);
    for (const auto& c : s.connectors)
        for (int k = -N; k <= N; ++k)
            color[connector_point_label(c.id, k)] = colorer.connector_color(c, k);
    for (const auto& f : s.families)
        for (int n = 0; n < N; ++n)
            for (int i = 0; i < f.size; ++i)
                color[family_point_label(f.id, n, i)] = colorer.family_color(f, i);

    for (auto [a, b] : g.edges)
        if (color.at(g.vertices[a]) == color.at(g.vertices[b])) return false;

    // Tail agreement: window colors must match the limit-orbit colors at the
    // matching anchors, both directions.
    for (const auto& c : s.connectors) {
        for (int k = -N; k <= -2; ++k)
            if (colorer.connector_color(c, k) != colorer.orbit_color(c.left.orbit, c.left.anchor + k))
                return false;
        for (int k = 2; k <= N; ++k)
            if (colorer.connector_color(c, k) != colorer.orbit_color(c.right.orbit, c.right.anchor + k))
                return false;
    }
    return true;
}

TwoColoringResult finite_two_colorable(const FiniteGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    auto adj = g.adjacency();
    for (auto& row : adj) std::sort(row.begin(), row.end());

    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // odd closed walk: tree paths to the meeting point plus (u,v)
                    int a = u, b = v;
                    std::vector<int> up_a{a}, up_b{b};
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            up_a.push_back(a);
                        } else {
                            b = parent[b];
                            up_b.push_back(b);
                        }
                    }
                    TwoColoringResult res;
                    for (std::size_t i = up_a.size(); i-- > 0;)
                        res.oddCycle.push_back(g.vertices[up_a[i]]);
                    for (std::size_t i = up_b.size() - 1; i-- > 0;)
                        res.oddCycle.push_back(g.vertices[up_b[i]]);
                    return res;
                }
            }
        }
    }
    TwoColoringResult res;
    res.coloring = std::move(color);
    return res;
}

int default_truncation_depth(const SystemPresentation& s) {
    int max_lambda = 1;
    for (const auto& o : s.orbits) max_lambda = std::max(max_lambda, o.lambda);
    return 2 * max_lambda *
           (static_cast<int>(s.connectors.size()) + static_cast<int>(s.families.size()) + 1);
}

bool constrained_truncation_colorable(const SystemPresentation& s, int N) {
    require_valid(s, "constrained_truncation_colorable");
    if (N < 1) throw std::invalid_argument("constrained_truncation_colorable: N must be >= 1");
    if (!fixed_point_set(s).isOpen) return false;

    auto orbits = orbit_table(s);

    // Components without orientation constraints must be 2-colorable on their
    // own: check them once via the bipartiteness search.
    {
        FiniteGraph side;
        for (const auto& o : s.orbits) {
            if (o.kind == OrbitKind::Limit) continue;
            std::vector<int> ring(o.lambda);
            for (int i = 0; i < o.lambda; ++i) ring[i] = side.add_vertex(orbit_point_label(o.id, i));
            for (int i = 0; i < o.lambda; ++i) side.add_edge(ring[i], ring[(i + 1) % o.lambda]);
        }
        for (const auto& f : s.families) {
            for (int n = 0; n < N; ++n) {
                std::vector<int> ring(f.size);
                for (int i = 0; i < f.size; ++i)
                    ring[i] = side.add_vertex(family_point_label(f.id, n, i));
                for (int i = 0; i < f.size; ++i) side.add_edge(ring[i], ring[(i + 1) % f.size]);
            }
        }
        if (!finite_two_colorable(side).coloring) return false;
    }

    std::vector<std::string> limit_ids;
    for (const auto& o : s.orbits) {
        if (o.kind != OrbitKind::Limit) continue;
        if (o.lambda % 2 != 0) return false;  // strict alternation impossible
        limit_ids.push_back(o.id);
    }
    if (limit_ids.size() > 24)
        throw std::invalid_argument("constrained_truncation_colorable: too many limit orbits");

    for (std::uint64_t mask = 0; mask < (1ull << limit_ids.size()); ++mask) {
        std::map<std::string, int> x;
        for (std::size_t i = 0; i < limit_ids.size(); ++i)
            x[limit_ids[i]] = static_cast<int>((mask >> i) & 1);

        bool ok = true;
        for (const auto& c : s.connectors) {
            // Backward boundary: beyond the window the tail alternates, so
            // agreement with the left anchor colors pins the color at -N.
            int lam_left = orbits.at(c.left.orbit).lambda;
            int lam_right = orbits.at(c.right.orbit).lambda;
            int col = x.at(c.left.orbit) ^ par(mod(c.left.anchor, lam_left) + N);
            for (int k = -N; k < N; ++k) col ^= 1;  // walk the window to +N
            int required = x.at(c.right.orbit) ^ par(mod(c.right.anchor, lam_right) + N);
            if (col != required) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace rank2
