#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tubelat/hopf.hpp"

namespace tubelat {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
// Throws ParseError on malformed input.
Graph graph_from_json(const Json& j);
Json to_json(const Tubing& t);
Json to_json(const MaximalTubing& x);
// Throws ParseError, or the tubing errors for invalid tube families.
Tubing tubing_from_json(const Json& j);
Json to_json(const GForest& t);
Json to_json(const Permutation& w);
Json to_json(const Arc& a);
Json to_json(const Congruence& c);
Json to_json(const FamilyCheck& r);
// Coefficients outside the int64 range are written as decimal strings.
Json to_json(const Coeff& c);
Json to_json(const PermSum& s);
Json to_json(const TubingSum& s);
Json to_json(const PermTensor& s);
Json to_json(const TubingTensor& s);
Json poset_to_json(const Poset& p, const std::vector<std::string>& labels);

std::vector<std::string> element_labels(const TubingPoset& lg);
std::vector<std::string> element_labels(const WeakOrder& w);

// Hasse diagram with covers drawn upward. A lattice failure, when given, is
// highlighted and described in the graph label.
std::string export_dot(const Poset& p, const std::vector<std::string>& labels,
                       const std::optional<LatticeFailure>& failure = std::nullopt);

} // namespace tubelat
