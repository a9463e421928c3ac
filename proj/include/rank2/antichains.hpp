#ifndef RANK2_ANTICHAINS_HPP
#define RANK2_ANTICHAINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rank2/analysis.hpp"
#include "rank2/bigint.hpp"
#include "rank2/order.hpp"

namespace rank2 {

// nu in (omega \ {0})^omega given by a finite preperiod and a repeating
// period; all entries >= 1.
struct EventuallyPeriodicSeq {
    std::vector<int> preperiod;
    std::vector<int> period;

    bool valid() const;
    int value(int n) const;
    bool operator==(const EventuallyPeriodicSeq&) const = default;
};

// Finite depth-K sample of the closed graph (X_nu, G_nu): the 2*kappa-1
// limit vertices, the vertex 01^inf, the 0^n 1^inf chain and its side
// cliques through level K-1, with the edge rules restricted to the included
// vertices.
struct XnuSample {
    int kappa = 2;
    EventuallyPeriodicSeq nu;
    int depth = 1;
    FiniteGraph graph;
};

XnuSample make_x_nu(int kappa, const EventuallyPeriodicSeq& nu, int depth);

// The tail-equality relation E_t: exists l, m with nu(l+n) == nu'(m+n) for
// all n; decidable for eventually periodic data by a bounded window scan.
bool et_equivalent(const EventuallyPeriodicSeq& nu, const EventuallyPeriodicSeq& nu2);

struct ForcedCompareResult {
    bool contradiction = false;
    int index = 0;  // propagation depth at which the last alignment died
};

// Replays the forced block-matching of the X_nu rigidity proof: every tail
// alignment of nu against nu' is propagated until it breaks or survives to
// the bound.  Contradiction at every alignment rules out an injective
// continuous homomorphism.
ForcedCompareResult x_nu_forced_compare(int kappa, const EventuallyPeriodicSeq& nu,
                                        const EventuallyPeriodicSeq& nu2, int bound);

// First |alpha| elements of S_alpha = { p_0^{a(0)+s} ... p_n^{a(n)+s} }.
// The default shift 1 matches the rank-2 family; shift 2 gives the prime
// coding used by the rank-3 sequences.
std::vector<BigUint> prime_coded(const std::vector<int>& alphaBits, int exponentShift = 1);

// Prefix of the injective ascending enumeration nu_alpha of S_alpha.
std::vector<BigUint> nu_alpha(const std::vector<int>& alphaBits, int count);

// Kneser graph K(n, k): vertices are the k-subsets of {1..n}, edges join
// disjoint subsets.
FiniteGraph kneser_graph(int n, int k);

std::string kneser_vertex_label(const std::vector<int>& subset);

struct ChromaticResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<int> chi;          // least color count <= maxColors, if any
    std::vector<int> coloring;       // per vertex, when chi is set
};

ChromaticResult chromatic_number(const FiniteGraph& g, int maxColors,
                                 long nodeBudget = kDefaultNodeBudget);

struct KneserSequenceRow {
    int p = 0;
    long long n = 0;
    long long k = 0;
    std::string binomial;
    long long chromatic = 0;
};

// Checks the antichain source sequence n_p = 3*2^p + 1, k_p = 2^p:
// (1) ratios n_p/k_p strictly decreasing and >= 3,
// (2) binomial(n_p, k_p) strictly increasing,
// (3) the chromatic values n_p - 2k_p + 2 pairwise distinct.
struct KneserSequenceReport {
    int pMax = 0;
    bool ratioOk = false;
    bool binomialOk = false;
    bool chromaticOk = false;
    std::vector<KneserSequenceRow> rows;
    bool pass() const { return ratioOk && binomialOk && chromaticOk; }
};

KneserSequenceReport kneser_sequence_check(int pMax);

}  // namespace rank2

#endif
