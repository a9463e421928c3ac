#include "rank2/antichains.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rank2 {

bool EventuallyPeriodicSeq::valid() const {
    if (period.empty()) return false;
    for (int v : preperiod)
        if (v < 1) return false;
    for (int v : period)
        if (v < 1) return false;
    return true;
}

int EventuallyPeriodicSeq::value(int n) const {
    if (n < static_cast<int>(preperiod.size())) return preperiod[n];
    return period[(n - preperiod.size()) % period.size()];
}

namespace {

std::string xnu_limit_label(int e) { return std::to_string(e) + "^inf"; }

std::string xnu_chain_label(int n) { return "0^" + std::to_string(n) + ".1^inf"; }

std::string xnu_side_label(int kappa, int e, int n) {
    int succ = (e + 1) % (2 * kappa - 1);
    return std::to_string(e) + "^" + std::to_string(n) + "." + std::to_string(succ) + "^inf";
}

}  // namespace

XnuSample make_x_nu(int kappa, const EventuallyPeriodicSeq& nu, int depth) {
    if (kappa < 2) throw std::invalid_argument("make_x_nu: kappa must be >= 2");
    if (depth < 1) throw std::invalid_argument("make_x_nu: depth must be >= 1");
    if (!nu.valid()) throw std::invalid_argument("make_x_nu: invalid sequence");

    XnuSample sample;
    sample.kappa = kappa;
    sample.nu = nu;
    sample.depth = depth;
    FiniteGraph& g = sample.graph;

    std::vector<int> limit(2 * kappa - 1);
    for (int e = 0; e < 2 * kappa - 1; ++e) limit[e] = g.add_vertex(xnu_limit_label(e));
    int v01 = g.add_vertex("01^inf");

    // chain position of beta_0^{nu,k,j}: n = 2 + j + sum_{i<k} nu(i)
    std::vector<int> levelBase(depth + 1);
    levelBase[0] = 2;
    for (int k = 0; k < depth; ++k) levelBase[k + 1] = levelBase[k] + nu.value(k);
    const int chainEnd = levelBase[depth];  // exclusive
    std::map<int, int> chain;
    for (int n = 2; n < chainEnd; ++n) chain[n] = g.add_vertex(xnu_chain_label(n));

    auto side_range = [&](int k) {
        std::vector<int> eps;
        if (k % 2 == 1)
            for (int e = 1; e < kappa; ++e) eps.push_back(e);
        else
            for (int e = kappa; e < 2 * kappa - 1; ++e) eps.push_back(e);
        return eps;
    };

    std::map<std::tuple<int, int, int>, int> side;  // (level, j, e) -> vertex
    for (int k = 0; k < depth; ++k)
        for (int j = 0; j < nu.value(k); ++j)
            for (int e : side_range(k))
                side[{k, j, e}] = g.add_vertex(xnu_side_label(kappa, e, levelBase[k] + j));

    // limit cliques {0..kappa-1} and {0} u [kappa, 2kappa-1)
    for (int e = 0; e < kappa; ++e)
        for (int f = e + 1; f < kappa; ++f) g.add_edge(limit[e], limit[f]);
    for (int e = kappa; e < 2 * kappa - 1; ++e) {
        g.add_edge(limit[0], limit[e]);
        for (int f = e + 1; f < 2 * kappa - 1; ++f) g.add_edge(limit[e], limit[f]);
    }

    g.add_edge(limit[0], v01);
    for (int e : side_range(0)) g.add_edge(v01, side.at({0, 0, e}));

    // level cliques: the chain vertex at position n together with its side
    // group forms a clique
    for (int k = 0; k < depth; ++k) {
        for (int j = 0; j < nu.value(k); ++j) {
            int n = levelBase[k] + j;
            std::vector<int> group{chain.at(n)};
            for (int e : side_range(k)) group.push_back(side.at({k, j, e}));
            for (std::size_t x = 0; x < group.size(); ++x)
                for (std::size_t y = x + 1; y < group.size(); ++y)
                    g.add_edge(group[x], group[y]);
        }
    }

    // cross edges: the side group at (k, j) also attaches to the previous
    // chain vertex, for levels k >= 1
    for (int k = 1; k < depth; ++k) {
        for (int j = 0; j < nu.value(k); ++j) {
            int prev = levelBase[k] + j - 1;
            auto it = chain.find(prev);
            if (it == chain.end()) continue;
            for (int e : side_range(k)) g.add_edge(it->second, side.at({k, j, e}));
        }
    }

    return sample;
}

bool et_equivalent(const EventuallyPeriodicSeq& nu, const EventuallyPeriodicSeq& nu2) {
    if (!nu.valid() || !nu2.valid()) throw std::invalid_argument("et_equivalent: invalid input");
    int preA = static_cast<int>(nu.preperiod.size());
    int preB = static_cast<int>(nu2.preperiod.size());
    int pa = static_cast<int>(nu.period.size());
    int pb = static_cast<int>(nu2.period.size());
    int window = std::max(preA, preB) + 2 * std::lcm(pa, pb);
    for (int l = 0; l < preA + pa; ++l) {
        for (int m = 0; m < preB + pb; ++m) {
            bool match = true;
            for (int n = 0; n < window && match; ++n)
                if (nu.value(l + n) != nu2.value(m + n)) match = false;
            if (match) return true;
        }
    }
    return false;
}

ForcedCompareResult x_nu_forced_compare(int kappa, const EventuallyPeriodicSeq& nu,
                                        const EventuallyPeriodicSeq& nu2, int bound) {
    if (kappa < 2) throw std::invalid_argument("x_nu_forced_compare: kappa must be >= 2");
    if (bound < 1) throw std::invalid_argument("x_nu_forced_compare: bound must be >= 1");
    if (!nu.valid() || !nu2.valid())
        throw std::invalid_argument("x_nu_forced_compare: invalid sequence");

    // A homomorphism forces nu(l+n) == nu'(m+n) for all n from some block
    // alignment (l, m) on; kill every alignment to conclude.
    int la = static_cast<int>(nu.preperiod.size() + nu.period.size());
    int lb = static_cast<int>(nu2.preperiod.size() + nu2.period.size());
    ForcedCompareResult res;
    res.contradiction = true;
    res.index = 0;
    for (int l = 0; l < la; ++l) {
        for (int m = 0; m < lb; ++m) {
            bool died = false;
            for (int n = 0; n <= bound; ++n) {
                if (nu.value(l + n) != nu2.value(m + n)) {
                    died = true;
                    res.index = std::max(res.index, n);
                    break;
                }
            }
            if (!died) {
                res.contradiction = false;
                res.index = 0;
                return res;
            }
        }
    }
    return res;
}

namespace {

std::vector<std::uint32_t> first_primes(std::size_t count) {
    std::vector<std::uint32_t> primes;
    std::uint32_t candidate = 2;
    while (primes.size() < count) {
        bool prime = true;
        for (std::uint32_t p : primes) {
            if (static_cast<std::uint64_t>(p) * p > candidate) break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(candidate);
        ++candidate;
    }
    return primes;
}

}  // namespace

std::vector<BigUint> prime_coded(const std::vector<int>& alphaBits, int exponentShift) {
    if (exponentShift < 1) throw std::invalid_argument("prime_coded: shift must be >= 1");
    for (int b : alphaBits)
        if (b != 0 && b != 1) throw std::invalid_argument("prime_coded: bits must be 0/1");
    std::vector<std::uint32_t> primes = first_primes(alphaBits.size());
    std::vector<BigUint> out;
    BigUint product(1);
    for (std::size_t i = 0; i < alphaBits.size(); ++i) {
        for (int e = 0; e < alphaBits[i] + exponentShift; ++e) product.mul_u32(primes[i]);
        out.push_back(product);
    }
    return out;
}

std::vector<BigUint> nu_alpha(const std::vector<int>& alphaBits, int count) {
    if (count < 0 || count > static_cast<int>(alphaBits.size()))
        throw std::invalid_argument("nu_alpha: count exceeds available prefix");
    std::vector<BigUint> all = prime_coded(alphaBits);
    all.resize(count);
    return all;  // products are strictly increasing: ascending enumeration
}

std::string kneser_vertex_label(const std::vector<int>& subset) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? "," : "") << subset[i];
    out << "}";
    return out.str();
}

FiniteGraph kneser_graph(int n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("kneser_graph: need n >= k >= 1");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    // k-subsets of {1..n} in lexicographic order
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);

    FiniteGraph g;
    for (const auto& s : subsets) g.add_vertex(kneser_vertex_label(s));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            bool disjoint = true;
            for (int x : subsets[i]) {
                if (std::find(subsets[j].begin(), subsets[j].end(), x) != subsets[j].end()) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

namespace {

struct ColorSearcher {
    const std::vector<std::vector<int>>& adj;
    const std::vector<int>& order;
    int colors;
    long& nodes;
    long budget;
    std::vector<int> assignment;

    SearchStatus run() { return place(0, 0); }

    SearchStatus place(std::size_t pos, int used) {
        if (++nodes > budget) return SearchStatus::Budget;
        if (pos == order.size()) return SearchStatus::Found;
        int v = order[pos];
        int tryUpTo = std::min(colors - 1, used);  // new color classes in order
        for (int c = 0; c <= tryUpTo; ++c) {
            bool ok = true;
            for (int nb : adj[v]) {
                if (assignment[nb] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assignment[v] = c;
            SearchStatus sub = place(pos + 1, std::max(used, c + 1));
            if (sub != SearchStatus::Exhausted) return sub;
            assignment[v] = -1;
        }
        return SearchStatus::Exhausted;
    }
};

}  // namespace

ChromaticResult chromatic_number(const FiniteGraph& g, int maxColors, long nodeBudget) {
    ChromaticResult res;
    if (g.vertices.empty()) {
        res.status = SearchStatus::Found;
        res.chi = 0;
        return res;
    }
    auto adj = g.adjacency();
    std::vector<int> order(g.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
        return a < b;
    });

    long nodes = 0;
    for (int c = 1; c <= maxColors; ++c) {
        ColorSearcher searcher{adj, order, c, nodes, nodeBudget, {}};
        searcher.assignment.assign(g.vertices.size(), -1);
        SearchStatus status = searcher.run();
        if (status == SearchStatus::Budget) {
            res.status = SearchStatus::Budget;
            return res;
        }
        if (status == SearchStatus::Found) {
            res.status = SearchStatus::Found;
            res.chi = c;
            res.coloring = searcher.assignment;
            return res;
        }
    }
    res.status = SearchStatus::Exhausted;  // NotFound within maxColors
    return res;
}

KneserSequenceReport kneser_sequence_check(int pMax) {
    if (pMax < 0) throw std::invalid_argument("kneser_sequence_check: pMax must be >= 0");
    KneserSequenceReport report;
    report.pMax = pMax;

    std::vector<BigUint> binomials;
    for (int p = 0; p <= pMax; ++p) {
        long long k = 1ll << p;
        long long n = 3 * k + 1;
        KneserSequenceRow row;
        row.p = p;
        row.n = n;
        row.k = k;
        row.chromatic = n - 2 * k + 2;
        BigUint binom = BigUint::binomial(static_cast<std::uint32_t>(n),
                                          static_cast<std::uint32_t>(k));
        row.binomial = binom.to_string();
        binomials.push_back(std::move(binom));
        report.rows.push_back(std::move(row));
    }

    report.ratioOk = true;
    for (int p = 0; p <= pMax; ++p) {
        const auto& row = report.rows[p];
        if (row.n < 3 * row.k) report.ratioOk = false;  // ratio >= 3
        if (p + 1 <= pMax) {
            const auto& next = report.rows[p + 1];
            // n_{p+1}/k_{p+1} < n_p/k_p
            if (!(next.n * row.k < row.n * next.k)) report.ratioOk = false;
        }
    }

    report.binomialOk = true;
    for (int p = 0; p + 1 <= pMax; ++p)
        if (!(binomials[p] < binomials[p + 1])) report.binomialOk = false;

    report.chromaticOk = true;
    for (int p = 0; p <= pMax; ++p)
        for (int q = p + 1; q <= pMax; ++q)
            if (report.rows[p].chromatic == report.rows[q].chromatic) report.chromaticOk = false;

    return report;
}

}  // namespace rank2
