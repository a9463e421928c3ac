#include "rank2/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rank2 {

const PeriodicOrbitSpec* SystemPresentation::find_orbit(const std::string& id) const {
    for (const auto& o : orbits)
        if (o.id == id) return &o;
    return nullptr;
}

bool PTuple::valid() const {
    if (l < 0 || static_cast<int>(lambdas.size()) != l + 1) return false;
    if (static_cast<int>(epsilons.size()) != l) return false;
    for (int lam : lambdas)
        if (lam <= 0 || lam % 2 != 0) return false;
    if (m <= 0 || m % 2 == 0 || m >= lambdas[0]) return false;
    for (int e : epsilons)
        if (e != 0 && e != 1) return false;
    return true;
}

std::strong_ordering PTuple::operator<=>(const PTuple& other) const {
    if (auto c = l <=> other.l; c != 0) return c;
    if (auto c = lambdas <=> other.lambdas; c != 0) return c;
    if (auto c = m <=> other.m; c != 0) return c;
    return epsilons <=> other.epsilons;
}

std::string PTuple::to_string() const {
    std::ostringstream out;
    out << "(" << l << ";";
    for (std::size_t i = 0; i < lambdas.size(); ++i) out << (i ? "," : "") << lambdas[i];
    out << ";" << m << ";";
    for (std::size_t i = 0; i < epsilons.size(); ++i) out << (i ? "," : "") << epsilons[i];
    out << ")";
    return out.str();
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) out << "; ";
        out << violations[i].code << ": " << violations[i].detail;
    }
    return out.str();
}

namespace {

bool word_primitive(const Word& w) {
    const int n = static_cast<int>(w.size());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool power = true;
        for (int i = d; i < n && power; ++i)
            if (w[i] != w[i % d]) power = false;
        if (power) return false;
    }
    return true;
}

bool words_conjugate(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    const int n = static_cast<int>(a.size());
    for (int r = 0; r < n; ++r) {
        bool same = true;
        for (int i = 0; i < n && same; ++i)
            if (a[(i + r) % n] != b[i]) same = false;
        if (same) return true;
    }
    return false;
}

// The subshift point denoted by a normal-form connector is
// w_L^{-inf} . middle . rot_s(w_R)^inf with s = (right.anchor + |middle|) mod
// lambda_R.  It coincides with the periodic point w^Z exactly when both tails
// sit on the same orbit, right.anchor == 0, and the middle extends the period.
bool connector_denotes_periodic_point(const ConnectorSpec& c, const PeriodicOrbitSpec& left) {
    if (c.left.orbit != c.right.orbit) return false;
    if (c.right.anchor % left.lambda != 0) return false;
    if (!left.word) return true;  // no symbols to break periodicity with
    const Word& w = *left.word;
    for (std::size_t i = 0; i < c.middle.size(); ++i)
        if (c.middle[i] != w[i % w.size()]) return false;
    return true;
}

}  // namespace

ValidationReport validate(const SystemPresentation& s) {
    ValidationReport report;
    auto flag = [&](std::string code, std::string detail) {
        report.violations.push_back({std::move(code), std::move(detail)});
    };

    std::map<std::string, const PeriodicOrbitSpec*> by_id;
    std::set<std::string> connector_ids, family_ids;
    for (const auto& o : s.orbits) {
        if (!by_id.emplace(o.id, &o).second) flag("duplicate-orbit-id", o.id);
        if (o.lambda < 1) flag("nonpositive-orbit-length", o.id);
        if (s.mode == Mode::Subshift) {
            if (!o.word) {
                flag("missing-word", "subshift orbit " + o.id + " has no word");
            } else {
                if (static_cast<int>(o.word->size()) != o.lambda)
                    flag("word-length-mismatch", o.id);
                else if (!word_primitive(*o.word))
                    flag("non-primitive-word", o.id);
            }
        } else if (o.word) {
            flag("word-in-homeomorphism-mode", o.id);
        }
    }

    if (s.mode == Mode::Subshift) {
        for (std::size_t i = 0; i < s.orbits.size(); ++i) {
            for (std::size_t j = i + 1; j < s.orbits.size(); ++j) {
                const auto &a = s.orbits[i], &b = s.orbits[j];
                if (a.kind == OrbitKind::Limit && b.kind == OrbitKind::Limit && a.word &&
                    b.word && words_conjugate(*a.word, *b.word))
                    flag("conjugate-limit-words", a.id + " / " + b.id);
            }
        }
    }

    std::set<std::string> referenced_limits;
    auto check_tail = [&](const ConnectorSpec& c, const TailAnchor& t, const char* side) {
        auto it = by_id.find(t.orbit);
        if (it == by_id.end()) {
            flag("unresolved-orbit-reference", c.id + " " + side + " -> " + t.orbit);
            return static_cast<const PeriodicOrbitSpec*>(nullptr);
        }
        const PeriodicOrbitSpec* o = it->second;
        if (o->kind != OrbitKind::Limit)
            flag("connector-to-isolated-orbit", c.id + " " + side + " -> " + t.orbit);
        if (t.anchor < 0 || t.anchor >= o->lambda)
            flag("anchor-out-of-range", c.id + " " + side);
        referenced_limits.insert(t.orbit);
        return o;
    };

    for (const auto& c : s.connectors) {
        if (!connector_ids.insert(c.id).second) flag("duplicate-connector-id", c.id);
        const PeriodicOrbitSpec* left = check_tail(c, c.left, "left");
        check_tail(c, c.right, "right");
        if (c.left.anchor != 0) flag("connector-not-normal-form", c.id);
        if (!c.middle.empty() && s.mode != Mode::Subshift)
            flag("middle-in-homeomorphism-mode", c.id);
        if (s.mode == Mode::Subshift && left && left->kind == OrbitKind::Limit &&
            c.left.anchor == 0 && connector_denotes_periodic_point(c, *left))
            flag("connector-denotes-periodic-point", c.id);
    }

    for (const auto& f : s.families) {
        if (!family_ids.insert(f.id).second) flag("duplicate-family-id", f.id);
        if (f.size < 1) flag("nonpositive-family-size", f.id);
        if (s.mode == Mode::Subshift) {
            // A subshift limit orbit is approached by only finitely many
            // distinct isolated orbits, so omega-families cannot occur.
            flag("family-in-subshift-mode", f.id);
        }
        auto it = by_id.find(f.limit);
        if (it == by_id.end()) {
            flag("unresolved-orbit-reference", f.id + " limit -> " + f.limit);
            continue;
        }
        const PeriodicOrbitSpec* o = it->second;
        if (o->kind != OrbitKind::Limit) flag("family-at-isolated-orbit", f.id);
        // Member points are f^size-fixed, so their limit points are too.
        if (f.size % o->lambda != 0) flag("family-size-not-multiple-of-limit", f.id);
        // Size-1 members would be fixed points accumulating on a fixed point;
        // they carry no edges and break the openness report, so they are out.
        if (f.size < 2) flag("family-of-fixed-points", f.id);
        referenced_limits.insert(f.limit);
    }

    for (const auto& o : s.orbits) {
        if (o.kind == OrbitKind::Limit && !referenced_limits.count(o.id))
            flag("unreachable-limit-orbit", o.id);
    }

    return report;
}

void require_valid(const SystemPresentation& s, const char* where) {
    ValidationReport r = validate(s);
    if (!r.ok())
        throw std::invalid_argument(std::string(where) + ": invalid presentation: " + r.summary());
}

SystemPresentation make_odd_cycle(int q) {
    if (q < 0) throw std::invalid_argument("make_odd_cycle: q must be >= 0");
    SystemPresentation s;
    s.mode = Mode::Subshift;
    PeriodicOrbitSpec o;
    o.id = "c";
    o.lambda = 2 * q + 3;
    o.kind = OrbitKind::Isolated;  // X' is empty: rank one
    Word w;
    for (int i = 0; i < o.lambda; ++i) w.push_back(std::to_string(i));
    o.word = std::move(w);
    s.orbits.push_back(std::move(o));
    return s;
}

SystemPresentation make_x1() {
    SystemPresentation s;
    s.mode = Mode::Homeomorphism;
    s.orbits.push_back({"fp", 1, OrbitKind::Limit, std::nullopt});
    s.families.push_back({"pairs", 2, "fp"});
    return s;
}

SystemPresentation make_n_sigma(int n) {
    if (n < 0) throw std::invalid_argument("make_n_sigma: n must be >= 0");
    if (n >= 3 && n % 2 == 1) return make_odd_cycle((n - 3) / 2);

    SystemPresentation s;
    s.mode = Mode::Subshift;
    PeriodicOrbitSpec zero{"0", 1, OrbitKind::Limit, Word{"0"}};
    if (n == 0) {
        s.orbits.push_back(zero);
        s.connectors.push_back({"z", {"0", 0}, {"0", 0}, Word{"1"}});
    } else if (n == 1) {
        s.orbits.push_back(zero);
        s.orbits.push_back({"1", 1, OrbitKind::Limit, Word{"1"}});
        s.connectors.push_back({"z", {"0", 0}, {"1", 0}, {}});
    } else {
        Word w;
        for (int i = 1; i <= n; ++i) w.push_back(std::to_string(i));
        s.orbits.push_back(zero);
        s.orbits.push_back({"w", n, OrbitKind::Limit, std::move(w)});
        s.connectors.push_back({"z", {"0", 0}, {"w", 0}, {}});
    }
    return s;
}

SystemPresentation make_sigma_p(const PTuple& p) {
    if (!p.valid()) throw std::invalid_argument("make_sigma_p: invalid PTuple " + p.to_string());
    SystemPresentation s;
    s.mode = Mode::Subshift;
    for (int i = 0; i <= p.l; ++i) {
        PeriodicOrbitSpec o;
        o.id = "y" + std::to_string(i);
        o.lambda = p.lambdas[i];
        o.kind = OrbitKind::Limit;
        Word w;
        for (int j = 0; j < o.lambda; ++j)
            w.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
        o.word = std::move(w);
        s.orbits.push_back(std::move(o));
    }
    // z_i = w_{i+eps_i}^{-inf} . w_{i+1-eps_i}^inf for i < l: both tails sit
    // at the base points, so the derived XOR constraint is even.
    for (int i = 0; i < p.l; ++i) {
        ConnectorSpec c;
        c.id = "z" + std::to_string(i);
        c.left = {"y" + std::to_string(i + p.epsilons[i]), 0};
        c.right = {"y" + std::to_string(i + 1 - p.epsilons[i]), 0};
        s.connectors.push_back(std::move(c));
    }
    // z_l = w_l^{-inf} . b_0..b_{m-1} . w_0^inf: sigma^{q*lambda_0 + m}(z_l)
    // converges to y_0, so sigma^{q*lambda_0}(z_l) -> point lambda_0 - m,
    // which is odd: the closing constraint is odd.
    {
        ConnectorSpec c;
        c.id = "z" + std::to_string(p.l);
        c.left = {"y" + std::to_string(p.l), 0};
        c.right = {"y0", (p.lambdas[0] - p.m) % p.lambdas[0]};
        for (int j = 0; j < p.m; ++j) c.middle.push_back("b" + std::to_string(j));
        s.connectors.push_back(std::move(c));
    }
    return s;
}

}  // namespace rank2
