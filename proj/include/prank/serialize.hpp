#pragma once

#include <string>

#include "json.hpp"
#include "prank/distance.hpp"
#include "prank/metrics.hpp"
#include "prank/recreate.hpp"

namespace prank {

using Json = nlohmann::json;

Json to_json(const DistanceSpec& spec);
/// Inverse of to_json; throws std::invalid_argument on malformed documents.
DistanceSpec distance_spec_from_json(const Json& doc);

Json to_json(const KsResult& ks);
Json to_json(const NetworkProfile& profile, bool with_vectors = true);
Json to_json(const NetworkComparison& cmp);
Json to_json(const RecreationReport& report);

/// Objects keep sorted keys, so equal values always print identically.
std::string dump(const Json& doc);

}  // namespace prank
