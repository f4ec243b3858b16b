#pragma once

#include "lp2dt/invariants.hpp"

#include <json.hpp>

namespace lp2dt {

using ordered_json = nlohmann::ordered_json;

// Canonical object: fields A, deltas, pis as part-lists (vertical-axis
// side then horizontal-axis side per chart), coincidences as a sorted
// 1-based pair list.
ordered_json data_to_json(const DeltaFamilyData& data);
DeltaFamilyData data_from_json(const ordered_json& j);

ordered_json row_to_json(const TableRow& row);
TableRow row_from_json(const ordered_json& j);

ordered_json report_to_json(const InvariantReport& rep);

// Table cache: one JSON file per b with a schema version; stale or
// mismatching files are recomputed.
inline constexpr int kCacheSchemaVersion = 1;

ordered_json table_to_json(int b, const std::vector<TableRow>& rows);

// Returns false when the payload does not match the requested b or the
// schema version.
bool table_from_json(const ordered_json& j, int b, std::vector<TableRow>& rows);

}  // namespace lp2dt
