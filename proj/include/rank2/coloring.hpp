#ifndef RANK2_COLORING_HPP
#define RANK2_COLORING_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rank2/analysis.hpp"
#include "rank2/presentation.hpp"

namespace rank2 {

enum class Kappa { Zero, One, Two, Three, Aleph0 };

std::string kappa_name(Kappa k);

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

// One XOR constraint per connector: with orientation variables x_j saying
// which parity class of limit orbit j receives color 0, a proper continuous
// 2-coloring forces x_left ^ x_right == par(left.anchor + right.anchor):
// connector colors alternate along the orbit and the tails must eventually
// agree with the limit colors at the matching anchors.
struct XorEquation {
    std::string left;
    std::string right;
    int parity = 0;
    std::string connector;
};

struct ParityConstraintSystem {
    std::vector<std::string> variables;  // even limit orbit ids, input order
    std::vector<XorEquation> equations;  // one per connector, input order
};

struct CycleStep {
    std::string connector;
    std::string from;
    std::string to;
};

struct Obstruction {
    enum class Kind {
        FixedPointNotOpen,
        OddFiniteOrbit,
        OddConstraintCycle,
        NonemptySpace,   // kappa = 0 only
        EdgePresent,     // kappa = 1 only
    };
    Kind kind{};
    std::string id;               // orbit / family / witness id
    int length = 0;               // OddFiniteOrbit
    std::vector<CycleStep> cycle; // OddConstraintCycle, in cycle order
    std::vector<std::string> cycle_connectors() const;
};

struct Witness {
    enum class Kind {
        Empty,     // kappa = 0: no points
        Constant,  // kappa = 1: no edges, constant color 0
        TwoColor,  // orientation per even limit orbit + closed-form rule
        Palette,   // kappa >= 3: fixed three-color closed form
    };
    Kind kind = Kind::Empty;
    std::map<std::string, int> orientations;  // TwoColor only
};

struct ColoringDecision {
    bool colorable = false;
    std::optional<Witness> witness;
    std::optional<Obstruction> obstruction;
};

// Requires: validated, removables stripped, no fixed or odd limit orbits,
// no families, no isolated orbits of odd length >= 3.
ParityConstraintSystem constraint_system(const SystemPresentation& s);

// GF(2) consistency via parity-propagating union-find.  On failure fills
// `cycle` with a minimal inconsistent cycle (BFS tree path + closing
// connector, deterministic).
bool xor_system_consistent(const ParityConstraintSystem& sys,
                           std::map<std::string, int>* solution,
                           std::vector<CycleStep>* cycle);

ColoringDecision decide_continuous_coloring(const SystemPresentation& s, Kappa kappa);

// Checks the witness rule on truncate(s, N): every edge bichromatic, and
// along each connector tail the colors equal the limit-orbit colors at the
// matching anchors from the window boundary inward.
bool verify_witness(const SystemPresentation& s, const Witness& w, int N);

struct TwoColoringResult {
    std::optional<std::vector<int>> coloring;    // per vertex, when bipartite
    std::vector<std::string> oddCycle;           // closed odd walk otherwise
};

TwoColoringResult finite_two_colorable(const FiniteGraph& g);

// Independent oracle for decide(s, 2): exhaustive search over orbit
// orientations with window propagation along connectors, plus bipartiteness
// of the leftover finite components.  Returns false outright when F_f is
// not open.
bool constrained_truncation_colorable(const SystemPresentation& s, int N);

// Safe engineering bound N0(s) for oracle agreement.
int default_truncation_depth(const SystemPresentation& s);

}  // namespace rank2

#endif
