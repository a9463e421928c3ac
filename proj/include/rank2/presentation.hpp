#ifndef RANK2_PRESENTATION_HPP
#define RANK2_PRESENTATION_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace rank2 {

// Finite presentations of countable compact systems (X, f) of
// Cantor-Bendixson rank at most two.  The derived set X' is a finite union
// of periodic "limit" orbits; everything else is isolated: finite orbits,
// doubly-infinite connector orbits whose tails converge onto limit orbits,
// and omega-families of finite orbits accumulating on a limit orbit.

enum class Mode { Homeomorphism, Subshift };
enum class OrbitKind { Limit, Isolated };

// A word is a finite sequence of alphabet symbols; symbols are strings so
// multi-character names like "a0_1" stay readable.
using Word = std::vector<std::string>;

struct PeriodicOrbitSpec {
    std::string id;
    int lambda = 1;  // orbit length, >= 1; lambda == 1 is a fixed point
    OrbitKind kind = OrbitKind::Isolated;
    std::optional<Word> word;  // subshift mode only, |word| == lambda

    bool operator==(const PeriodicOrbitSpec&) const = default;
};

struct TailAnchor {
    std::string orbit;
    int anchor = 0;  // phase residue in [0, lambda(orbit))

    bool operator==(const TailAnchor&) const = default;
};

// An isolated doubly-infinite orbit Orb(z).  Backward tail: f^{-q*lambda_L}(z)
// converges to point `left.anchor` of the left orbit; forward tail:
// f^{q*lambda_R}(z) converges to point `right.anchor` of the right orbit.
// Normal form fixes left.anchor == 0 by choosing the base point z.
struct ConnectorSpec {
    std::string id;
    TailAnchor left;
    TailAnchor right;
    Word middle;  // subshift mode; empty means the tails abut directly

    bool operator==(const ConnectorSpec&) const = default;
};

// An omega-indexed family of pairwise disjoint isolated orbits, each of
// `size` points, converging to the limit orbit.  Members carry no phase
// data: every downstream use is phase-independent.
struct FamilySpec {
    std::string id;
    int size = 2;
    std::string limit;

    bool operator==(const FamilySpec&) const = default;
};

struct SystemPresentation {
    Mode mode = Mode::Homeomorphism;
    std::vector<PeriodicOrbitSpec> orbits;
    std::vector<ConnectorSpec> connectors;
    std::vector<FamilySpec> families;

    bool operator==(const SystemPresentation&) const = default;

    bool empty() const { return orbits.empty() && connectors.empty() && families.empty(); }
    const PeriodicOrbitSpec* find_orbit(const std::string& id) const;
};

// Parameter tuple p = (l, lambda_0..lambda_l, m, eps_0..eps_{l-1}) of the
// subshift Sigma_p: every lambda_i > 0 even, m < lambda_0 odd.
struct PTuple {
    int l = 0;
    std::vector<int> lambdas;
    int m = 1;
    std::vector<int> epsilons;

    bool valid() const;
    bool operator==(const PTuple&) const = default;
    // Lexicographic on (l, lambda_0, ..., lambda_l, m, eps_0, ..., eps_{l-1}).
    std::strong_ordering operator<=>(const PTuple& other) const;
    std::string to_string() const;
};

struct Violation {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate(const SystemPresentation& s);

// Throws std::invalid_argument with the validation summary unless ok.
void require_valid(const SystemPresentation& s, const char* where);

// The odd cycle (2q+3, C_{2q+3}) as a rank-1 single-orbit subshift.
SystemPresentation make_odd_cycle(int q);

// X_1 = {0^n 1^inf} u {0^inf} with f_1 swapping 0^{2n}1^inf and 0^{2n+1}1^inf.
SystemPresentation make_x1();

// The subshifts nSigma; n = 2q+3 dispatches to make_odd_cycle(q).
SystemPresentation make_n_sigma(int n);

// The subshift Sigma_p for p in the parameter set P.
SystemPresentation make_sigma_p(const PTuple& p);

}  // namespace rank2

#endif
