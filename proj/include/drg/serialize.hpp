#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "drg/jacobi.hpp"
#include "drg/regularity.hpp"

namespace drg {

// Insertion-ordered so emitted documents have a fixed field order.
using Json = nlohmann::ordered_json;

// {"d", "a", "b", "degree", "alpha", "deg_k"}
Json to_json(const IntersectionSequence& is);
Json to_json(const NonRegularityWitness& w);
// {"size", "diag", "offdiag", "tau"}; tau is null for corner truncations.
Json to_json(const JacobiOperator& J);
// {"tau", "atoms": [{"lambda", "weight", "multiplicity"?}]}
Json to_json(const SpectralMeasure& mu);

IntersectionSequence intersection_sequence_from_json(const Json& j);

/// Two-column "lambda weight" table, one atom per line, 17 significant digits.
std::string plot_table(const SpectralMeasure& mu);

}  // namespace drg
