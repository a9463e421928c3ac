#include "rank2/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rank2 {

int FiniteGraph::add_vertex(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(vertices.size());
    vertices.push_back(label);
    index_.emplace(label, idx);
    return idx;
}

int FiniteGraph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

void FiniteGraph::add_edge(int a, int b) {
    if (a == b) return;  // irreflexive
    if (a > b) std::swap(a, b);
    edges.emplace(a, b);
}

bool FiniteGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) != 0;
}

std::vector<std::vector<int>> FiniteGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::string orbit_point_label(const std::string& orbitId, int i) {
    return orbitId + ":" + std::to_string(i);
}

std::string connector_point_label(const std::string& connectorId, int k) {
    return connectorId + "@" + std::to_string(k);
}

std::string family_point_label(const std::string& familyId, int member, int i) {
    return familyId + "#" + std::to_string(member) + ":" + std::to_string(i);
}

SystemPresentation cb_derivative(const SystemPresentation& s) {
    require_valid(s, "cb_derivative");
    SystemPresentation out;
    out.mode = s.mode;
    for (const auto& o : s.orbits) {
        if (o.kind != OrbitKind::Limit) continue;
        PeriodicOrbitSpec copy = o;
        copy.kind = OrbitKind::Isolated;
        out.orbits.push_back(std::move(copy));
    }
    return out;
}

int cb_rank(const SystemPresentation& s) {
    require_valid(s, "cb_rank");
    if (s.empty()) return 0;
    for (const auto& o : s.orbits)
        if (o.kind == OrbitKind::Limit) return 2;
    return 1;
}

FixedPointReport fixed_point_set(const SystemPresentation& s) {
    require_valid(s, "fixed_point_set");
    FixedPointReport r;
    for (const auto& o : s.orbits) {
        if (o.lambda != 1) continue;
        if (o.kind == OrbitKind::Limit)
            r.fixedLimitOrbits.insert(o.id);
        else
            r.isolatedFixedOrbits.insert(o.id);
    }
    r.isOpen = r.fixedLimitOrbits.empty();
    return r;
}

SystemPresentation remove_removables(const SystemPresentation& s) {
    require_valid(s, "remove_removables");
    SystemPresentation out = s;
    for (bool changed = true; changed;) {
        changed = false;

        std::vector<PeriodicOrbitSpec> orbits;
        for (const auto& o : out.orbits) {
            if (o.kind == OrbitKind::Isolated && (o.lambda == 1 || o.lambda % 2 == 0)) {
                changed = true;
                continue;
            }
            orbits.push_back(o);
        }
        out.orbits = std::move(orbits);

        std::vector<FamilySpec> families;
        for (const auto& f : out.families) {
            const PeriodicOrbitSpec* limit = out.find_orbit(f.limit);
            bool limit_fixed = limit && limit->lambda == 1;
            if (f.size % 2 == 0 && !limit_fixed) {
                changed = true;
                continue;
            }
            families.push_back(f);
        }
        out.families = std::move(families);

        // A limit orbit whose approaching isolated points were all removed is
        // itself isolated in the reduced space.
        for (auto& o : out.orbits) {
            if (o.kind != OrbitKind::Limit) continue;
            bool referenced = false;
            for (const auto& c : out.connectors)
                if (c.left.orbit == o.id || c.right.orbit == o.id) referenced = true;
            for (const auto& f : out.families)
                if (f.limit == o.id) referenced = true;
            if (!referenced) {
                o.kind = OrbitKind::Isolated;
                changed = true;
            }
        }
    }
    return out;
}

FiniteGraph truncate(const SystemPresentation& s, int N) {
    require_valid(s, "truncate");
    if (N < 1) throw std::invalid_argument("truncate: N must be >= 1");
    FiniteGraph g;
    for (const auto& o : s.orbits) {
        std::vector<int> ring(o.lambda);
        for (int i = 0; i < o.lambda; ++i) ring[i] = g.add_vertex(orbit_point_label(o.id, i));
        for (int i = 0; i < o.lambda; ++i) g.add_edge(ring[i], ring[(i + 1) % o.lambda]);
    }
    for (const auto& c : s.connectors) {
        int prev = -1;
        for (int k = -N; k <= N; ++k) {
            int cur = g.add_vertex(connector_point_label(c.id, k));
            if (prev >= 0) g.add_edge(prev, cur);
            prev = cur;
        }
    }
    for (const auto& f : s.families) {
        for (int n = 0; n < N; ++n) {
            std::vector<int> ring(f.size);
            for (int i = 0; i < f.size; ++i) ring[i] = g.add_vertex(family_point_label(f.id, n, i));
            for (int i = 0; i < f.size; ++i) g.add_edge(ring[i], ring[(i + 1) % f.size]);
        }
    }
    return g;
}

std::string to_dot(const FiniteGraph& g) {
    std::ostringstream out;
    out << "graph truncation {\n";
    for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
    for (auto [a, b] : g.edges)
        out << "  \"" << g.vertices[a] << "\" -- \"" << g.vertices[b] << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rank2
