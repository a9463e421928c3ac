#ifndef RANK2_ANALYSIS_HPP
#define RANK2_ANALYSIS_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rank2/presentation.hpp"

namespace rank2 {

// Labeled symmetric irreflexive graph; edges stored as index pairs i < j.
struct FiniteGraph {
    std::vector<std::string> vertices;
    std::set<std::pair<int, int>> edges;

    int add_vertex(const std::string& label);
    int index_of(const std::string& label) const;  // -1 if absent
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    std::vector<std::vector<int>> adjacency() const;

private:
    std::map<std::string, int> index_;
};

struct FixedPointReport {
    std::set<std::string> fixedLimitOrbits;
    std::set<std::string> isolatedFixedOrbits;
    bool isOpen = true;
};

// X': the limit orbits, re-marked isolated; applying twice gives the empty
// presentation.
SystemPresentation cb_derivative(const SystemPresentation& s);

// 0 if empty, 1 if nonempty with no limit orbits, 2 otherwise.
int cb_rank(const SystemPresentation& s);

// F_f is open exactly when no fixed orbit is a limit orbit: every limit
// orbit is approached by non-fixed isolated points by the reachability and
// family-size invariants.
FixedPointReport fixed_point_set(const SystemPresentation& s);

// Strips components that do not affect continuous 2-colorability: isolated
// fixed points, isolated orbits of even length, and even-size families whose
// limit orbit is not fixed.  Families at fixed limit orbits stay: they
// witness that F_f is not open.
SystemPresentation remove_removables(const SystemPresentation& s);

// Finite window onto G_f: all periodic-orbit points, connector points f^k(z)
// for |k| <= N, and the first N members of each family.
FiniteGraph truncate(const SystemPresentation& s, int N);

std::string to_dot(const FiniteGraph& g);

// Truncation vertex labels, shared by the coloring and order modules.
std::string orbit_point_label(const std::string& orbitId, int i);
std::string connector_point_label(const std::string& connectorId, int k);
std::string family_point_label(const std::string& familyId, int member, int i);

}  // namespace rank2

#endif
