#ifndef RANK2_BASIS_HPP
#define RANK2_BASIS_HPP

#include <set>
#include <string>

#include "rank2/coloring.hpp"
#include "rank2/presentation.hpp"

namespace rank2 {

// Canonical element of the antichain basis.  NSigma(2q+3) is the odd cycle
// C_{2q+3} seen as a subshift, so the factory folds it into OddCycle(q).
struct BasisElement {
    enum class Tag { OddCycle, X1, NSigma, SigmaP };
    Tag tag = Tag::X1;
    int q = 0;   // OddCycle
    int n = 0;   // NSigma
    PTuple p;    // SigmaP

    static BasisElement odd_cycle(int q);
    static BasisElement x1();
    static BasisElement n_sigma(int n);
    static BasisElement sigma_p(PTuple p);

    bool operator==(const BasisElement&) const = default;
    std::string to_string() const;
};

enum class BasisMode { Homeo, Subshift };

// The canonical basis element below a non-2-colorable system, dispatching on
// the obstruction decide_continuous_coloring(s, 2) reports.
BasisElement basis_below(const SystemPresentation& s, BasisMode mode);

// Case analysis at a fixed limit orbit of a subshift: reads the orbit length
// on the other side of an incident connector and returns the n with
// nSigma embeddable.
int subshift_fixed_case(const SystemPresentation& s);

// Recovers a PTuple from the odd constraint cycle of decide(s, 2):
// orbit lengths in cycle order, traversal direction per intermediate
// connector, and m as the accumulated anchor displacement around the cycle.
PTuple extract_p(const SystemPresentation& s);

// Walks an inconsistent connector cycle into Sigma_p normal form; exposed so
// rotation/reflection starts can be compared.  `start` rotates the cycle,
// `reversed` flips the traversal.
PTuple walk_cycle_to_ptuple(const SystemPresentation& s, const std::vector<CycleStep>& cycle,
                            std::size_t start, bool reversed);

// All tuples in the finite scan box equivalent to p (p itself included).
std::set<PTuple> enumerate_Fp(const PTuple& p, int jobs = 1);

// Lexicographic minimum of enumerate_Fp(p); idempotent and constant on each
// equivalence class.
PTuple canon_p(const PTuple& p, int jobs = 1);

SystemPresentation materialize(const BasisElement& e);

}  // namespace rank2

#endif
