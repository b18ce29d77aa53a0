#pragma once

#include <string>

#include <json.hpp>

#include "simcore/core_space.hpp"
#include "simcore/partition.hpp"
#include "simcore/semigroup.hpp"
#include "simcore/triples.hpp"

namespace simcore {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Json to_json(const BetaSet& beta);
/// {gens, frobenius, gaps}; frobenius and gaps are null when the gap set is infinite.
Json to_json(const NumericalSemigroup& semigroup);
Json to_json(const GapPoset& poset);
Json to_json(const UMReport& report);
Json to_json(const TripleReport& report);

/// "{1,2,4}"
std::string to_brace_string(const std::vector<int>& values);
std::string to_brace_string(const BetaSet& beta);

/// DOT digraph of the Hasse diagram: one node per gap (ascending), one edge upper -> lower per
/// cover, edges sorted by (upper, lower).
std::string emit_dot(const GapPoset& poset);

}  // namespace simcore
