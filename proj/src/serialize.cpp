#include "rank2/serialize.hpp"

#include <sstream>

namespace rank2 {

ParseError::ParseError(const std::string& message, std::string path_)
    : std::runtime_error(message + (path_.empty() ? "" : " at " + path_)), path(std::move(path_)) {}

namespace {

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed,
                    const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* name : allowed)
            if (it.key() == name) known = true;
        if (!known) throw ParseError("unknown field: " + it.key(), path);
    }
}

const Json& need(const Json& j, const char* field, const std::string& path) {
    auto it = j.find(field);
    if (it == j.end()) throw ParseError(std::string("missing field: ") + field, path);
    return *it;
}

std::string need_string(const Json& j, const char* field, const std::string& path) {
    const Json& v = need(j, field, path);
    if (!v.is_string()) throw ParseError(std::string("field must be a string: ") + field, path);
    return v.get<std::string>();
}

int need_int(const Json& j, const char* field, const std::string& path) {
    const Json& v = need(j, field, path);
    if (!v.is_number_integer()) throw ParseError(std::string("field must be an integer: ") + field, path);
    return v.get<int>();
}

Word word_from_json(const Json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError("word must be an array of symbols", path);
    Word w;
    for (const auto& sym : v) {
        if (!sym.is_string()) throw ParseError("word symbols must be strings", path);
        w.push_back(sym.get<std::string>());
    }
    return w;
}

}  // namespace

Json presentation_to_json(const SystemPresentation& s) {
    Json j;
    j["mode"] = s.mode == Mode::Subshift ? "subshift" : "homeomorphism";
    j["orbits"] = Json::array();
    for (const auto& o : s.orbits) {
        Json jo;
        jo["id"] = o.id;
        jo["lambda"] = o.lambda;
        jo["kind"] = o.kind == OrbitKind::Limit ? "limit" : "isolated";
        if (o.word) jo["word"] = *o.word;
        j["orbits"].push_back(std::move(jo));
    }
    j["connectors"] = Json::array();
    for (const auto& c : s.connectors) {
        Json jc;
        jc["id"] = c.id;
        jc["left"] = Json{{"orbit", c.left.orbit}, {"anchor", c.left.anchor}};
        jc["right"] = Json{{"orbit", c.right.orbit}, {"anchor", c.right.anchor}};
        if (!c.middle.empty()) jc["middle"] = c.middle;
        j["connectors"].push_back(std::move(jc));
    }
    j["families"] = Json::array();
    for (const auto& f : s.families) {
        j["families"].push_back(Json{{"id", f.id}, {"size", f.size}, {"limit", f.limit}});
    }
    return j;
}

std::string serialize(const SystemPresentation& s) {
    require_valid(s, "serialize");
    return presentation_to_json(s).dump(2) + "\n";
}

SystemPresentation presentation_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("document must be an object", "/");
    reject_unknown(j, {"mode", "orbits", "connectors", "families"}, "/");
    SystemPresentation s;
    std::string mode = need_string(j, "mode", "/");
    if (mode == "homeomorphism")
        s.mode = Mode::Homeomorphism;
    else if (mode == "subshift")
        s.mode = Mode::Subshift;
    else
        throw ParseError("mode must be homeomorphism or subshift", "/mode");

    if (auto it = j.find("orbits"); it != j.end()) {
        if (!it->is_array()) throw ParseError("orbits must be an array", "/orbits");
        int idx = 0;
        for (const auto& jo : *it) {
            std::string path = "/orbits/" + std::to_string(idx++);
            reject_unknown(jo, {"id", "lambda", "kind", "word"}, path);
            PeriodicOrbitSpec o;
            o.id = need_string(jo, "id", path);
            o.lambda = need_int(jo, "lambda", path);
            std::string kind = need_string(jo, "kind", path);
            if (kind == "limit")
                o.kind = OrbitKind::Limit;
            else if (kind == "isolated")
                o.kind = OrbitKind::Isolated;
            else
                throw ParseError("kind must be limit or isolated", path);
            if (auto w = jo.find("word"); w != jo.end()) o.word = word_from_json(*w, path);
            s.orbits.push_back(std::move(o));
        }
    }
    if (auto it = j.find("connectors"); it != j.end()) {
        if (!it->is_array()) throw ParseError("connectors must be an array", "/connectors");
        int idx = 0;
        for (const auto& jc : *it) {
            std::string path = "/connectors/" + std::to_string(idx++);
            reject_unknown(jc, {"id", "left", "right", "middle"}, path);
            ConnectorSpec c;
            c.id = need_string(jc, "id", path);
            for (const char* side : {"left", "right"}) {
                const Json& js = need(jc, side, path);
                reject_unknown(js, {"orbit", "anchor"}, path + "/" + side);
                TailAnchor t;
                t.orbit = need_string(js, "orbit", path + "/" + side);
                t.anchor = need_int(js, "anchor", path + "/" + side);
                (side[0] == 'l' ? c.left : c.right) = std::move(t);
            }
            if (auto m = jc.find("middle"); m != jc.end()) c.middle = word_from_json(*m, path);
            s.connectors.push_back(std::move(c));
        }
    }
    if (auto it = j.find("families"); it != j.end()) {
        if (!it->is_array()) throw ParseError("families must be an array", "/families");
        int idx = 0;
        for (const auto& jf : *it) {
            std::string path = "/families/" + std::to_string(idx++);
            reject_unknown(jf, {"id", "size", "limit"}, path);
            FamilySpec f;
            f.id = need_string(jf, "id", path);
            f.size = need_int(jf, "size", path);
            f.limit = need_string(jf, "limit", path);
            s.families.push_back(std::move(f));
        }
    }
    return s;
}

SystemPresentation parse_presentation(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what(),
                         "byte " + std::to_string(e.byte));
    }
    return presentation_from_json(j);
}

namespace {

std::string obstruction_kind_name(Obstruction::Kind k) {
    switch (k) {
        case Obstruction::Kind::FixedPointNotOpen: return "FixedPointNotOpen";
        case Obstruction::Kind::OddFiniteOrbit: return "OddFiniteOrbit";
        case Obstruction::Kind::OddConstraintCycle: return "OddConstraintCycle";
        case Obstruction::Kind::NonemptySpace: return "NonemptySpace";
        case Obstruction::Kind::EdgePresent: return "EdgePresent";
    }
    return "?";
}

std::string witness_kind_name(Witness::Kind k) {
    switch (k) {
        case Witness::Kind::Empty: return "empty";
        case Witness::Kind::Constant: return "constant";
        case Witness::Kind::TwoColor: return "two-color";
        case Witness::Kind::Palette: return "three-color";
    }
    return "?";
}

}  // namespace

Json decision_to_json(const ColoringDecision& d) {
    Json j;
    j["answer"] = d.colorable ? "Colorable" : "NotColorable";
    if (d.witness) {
        Json w;
        w["kind"] = witness_kind_name(d.witness->kind);
        if (d.witness->kind == Witness::Kind::TwoColor) {
            Json o = Json::object();
            for (const auto& [orbit, bit] : d.witness->orientations) o[orbit] = bit;
            w["orientations"] = std::move(o);
        }
        j["witness"] = std::move(w);
    }
    if (d.obstruction) {
        const Obstruction& ob = *d.obstruction;
        Json o;
        o["kind"] = obstruction_kind_name(ob.kind);
        switch (ob.kind) {
            case Obstruction::Kind::OddFiniteOrbit:
                o["orbit"] = ob.id;
                o["length"] = ob.length;
                break;
            case Obstruction::Kind::OddConstraintCycle: {
                o["connectors"] = ob.cycle_connectors();
                Json walk = Json::array();
                for (const auto& step : ob.cycle)
                    walk.push_back(Json{{"connector", step.connector},
                                        {"from", step.from},
                                        {"to", step.to}});
                o["walk"] = std::move(walk);
                break;
            }
            default:
                o["witness"] = ob.id;
                break;
        }
        j["obstruction"] = std::move(o);
    }
    return j;
}

Json basis_element_to_json(const BasisElement& e) {
    Json j;
    switch (e.tag) {
        case BasisElement::Tag::OddCycle:
            j["tag"] = "OddCycle";
            j["q"] = e.q;
            break;
        case BasisElement::Tag::X1:
            j["tag"] = "X1";
            break;
        case BasisElement::Tag::NSigma:
            j["tag"] = "NSigma";
            j["n"] = e.n;
            break;
        case BasisElement::Tag::SigmaP:
            j["tag"] = "SigmaP";
            j["p"] = Json{{"l", e.p.l},
                          {"lambdas", e.p.lambdas},
                          {"m", e.p.m},
                          {"epsilons", e.p.epsilons}};
            break;
    }
    return j;
}

namespace {

Json evidence_to_json(const DirectionEvidence& e) {
    Json j;
    j["embeds"] = e.embeds;
    if (e.reason) j["reason"] = refutation_reason_name(*e.reason);
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

}  // namespace

Json verdict_to_json(const ComparisonVerdict& v) {
    Json j;
    j["relation"] = relation_name(v.relation);
    j["forward"] = evidence_to_json(v.forward);
    j["backward"] = evidence_to_json(v.backward);
    return j;
}

Json refute_to_json(const RefuteResult& r) {
    Json j;
    switch (r.status) {
        case SearchStatus::Found: j["status"] = "embedding-found"; break;
        case SearchStatus::Exhausted: j["status"] = "refuted"; break;
        case SearchStatus::Budget: j["status"] = "unknown"; break;
    }
    j["refuted"] = r.refuted;
    j["nodes"] = r.nodes;
    if (!r.placements.empty()) j["embedding"] = r.placements;
    return j;
}

Json graph_to_json(const FiniteGraph& g) {
    Json j;
    j["vertices"] = g.vertices;
    Json edges = Json::array();
    for (auto [a, b] : g.edges) edges.push_back(Json::array({g.vertices[a], g.vertices[b]}));
    j["edges"] = std::move(edges);
    return j;
}

Json kneser_report_to_json(const KneserSequenceReport& r) {
    Json j;
    j["pMax"] = r.pMax;
    j["ratioDecreasingAndAtLeast3"] = r.ratioOk;
    j["binomialIncreasing"] = r.binomialOk;
    j["chromaticDistinct"] = r.chromaticOk;
    j["pass"] = r.pass();
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"p", row.p},
                            {"n", row.n},
                            {"k", row.k},
                            {"binomial", row.binomial},
                            {"chromatic", row.chromatic}});
    }
    j["rows"] = std::move(rows);
    return j;
}

PTuple parse_ptuple_spec(const std::string& spec) {
    std::vector<std::string> groups;
    std::string cur;
    for (char ch : spec) {
        if (ch == ';') {
            groups.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    groups.push_back(cur);
    if (groups.size() != 4 && groups.size() != 3)
        throw ParseError("p spec must be l;lambda,..;m;eps,..", spec);
    auto ints = [&](const std::string& text) {
        std::vector<int> out;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ',')) {
            if (item.empty()) continue;
            out.push_back(std::stoi(item));
        }
        return out;
    };
    PTuple p;
    p.l = std::stoi(groups[0]);
    p.lambdas = ints(groups[1]);
    p.m = std::stoi(groups[2]);
    if (groups.size() == 4) p.epsilons = ints(groups[3]);
    if (!p.valid()) throw ParseError("not a valid Sigma_p parameter", spec);
    return p;
}

EventuallyPeriodicSeq parse_nu_spec(const std::string& spec) {
    auto bar = spec.find('|');
    auto ints = [&](const std::string& text) {
        std::vector<int> out;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ',')) {
            if (item.empty()) continue;
            out.push_back(std::stoi(item));
        }
        return out;
    };
    EventuallyPeriodicSeq nu;
    if (bar == std::string::npos) {
        nu.period = ints(spec);
    } else {
        nu.preperiod = ints(spec.substr(0, bar));
        nu.period = ints(spec.substr(bar + 1));
    }
    if (!nu.valid()) throw ParseError("nu spec must be pre|period with entries >= 1", spec);
    return nu;
}

}  // namespace rank2
