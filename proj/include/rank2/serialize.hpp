#ifndef RANK2_SERIALIZE_HPP
#define RANK2_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include "rank2/antichains.hpp"
#include "rank2/basis.hpp"
#include "rank2/coloring.hpp"
#include "rank2/order.hpp"
#include "rank2/presentation.hpp"

#include <json.hpp>

namespace rank2 {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    std::string path;  // JSON-pointer-ish location of the offending field
    ParseError(const std::string& message, std::string path_);
};

// Interchange document for presentations.  Field names are fixed; unknown
// fields are rejected.
std::string serialize(const SystemPresentation& s);
Json presentation_to_json(const SystemPresentation& s);
SystemPresentation parse_presentation(const std::string& text);
SystemPresentation presentation_from_json(const Json& j);

Json decision_to_json(const ColoringDecision& d);
Json basis_element_to_json(const BasisElement& e);
Json verdict_to_json(const ComparisonVerdict& v);
Json refute_to_json(const RefuteResult& r);
Json graph_to_json(const FiniteGraph& g);
Json kneser_report_to_json(const KneserSequenceReport& r);

PTuple parse_ptuple_spec(const std::string& spec);      // "l;a,b,..;m;e,e,.."
EventuallyPeriodicSeq parse_nu_spec(const std::string& spec);  // "pre|period"

}  // namespace rank2

#endif
