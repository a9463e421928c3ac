#ifndef RANK2_ORDER_HPP
#define RANK2_ORDER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2/analysis.hpp"
#include "rank2/basis.hpp"
#include "rank2/presentation.hpp"

namespace rank2 {

enum class SearchStatus { Found, Exhausted, Budget };

struct HomSearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::map<std::string, std::string> map;  // G vertex -> H vertex when Found
    long nodes = 0;
};

inline constexpr long kDefaultNodeBudget = 2'000'000;

// Backtracking search for an injective map carrying every G-edge to an
// H-edge.  Vertices are tried by descending degree, then label.
HomSearchResult injective_hom_exists(const FiniteGraph& g, const FiniteGraph& h,
                                     long nodeBudget = kDefaultNodeBudget);

// Same search without the injectivity requirement.
HomSearchResult graph_hom_exists(const FiniteGraph& g, const FiniteGraph& h,
                                 long nodeBudget = kDefaultNodeBudget);

enum class Relation { Below, Above, Equivalent, Incomparable };

enum class RefutationReason {
    SizeMismatch,
    OrbitCountMismatch,
    ColoringSeparation,
    ForcedContradiction,
    ExhaustiveSearch,
};

std::string relation_name(Relation r);
std::string refutation_reason_name(RefutationReason r);

struct DirectionEvidence {
    bool embeds = false;
    std::optional<RefutationReason> reason;
    std::string note;
};

struct ComparisonVerdict {
    Relation relation = Relation::Incomparable;
    DirectionEvidence forward;   // a into b
    DirectionEvidence backward;  // b into a
};

// Decision table over the canonical families, backed by the paper-level
// separation arguments; exact, no search.
ComparisonVerdict compare_canonical(const BasisElement& a, const BasisElement& b);

// Structural isomorphism of presentations: an orbit bijection preserving
// kind and length together with per-connector trajectory maps
// k -> d*k + shift whose induced orbit maps are consistent.  This is exactly
// flip-conjugacy of the presented systems, component directions included.
bool presentation_isomorphic(const SystemPresentation& a, const SystemPresentation& b);

// Structural equivalence of Sigma_p parameters.
bool sigma_p_equivalent(const PTuple& p, const PTuple& q);

struct RefuteResult {
    SearchStatus status = SearchStatus::Exhausted;
    bool refuted = false;  // status Exhausted: no constrained embedding
    std::vector<std::string> placements;  // partial embedding description when Found
    long nodes = 0;
};

// Falsification oracle on truncations: searches for an injective
// homomorphism truncate(a, N) -> truncate(b, N + slack) under the orbit
// preservation constraints (finite orbits onto same-size orbits, connector
// windows rigidly into windows with consistent closures).  A refutation is
// relative to those constraints; a found embedding is non-conclusive
// positive evidence.
RefuteResult truncation_refutes(const SystemPresentation& a, const SystemPresentation& b, int N,
                                int slack = -1, long nodeBudget = kDefaultNodeBudget);

}  // namespace rank2

#endif
