#pragma once

#include <ostream>

#include <json.hpp>

#include "shiftdec/decomp.hpp"

namespace shiftdec {

using Json = nlohmann::ordered_json;

/// One JSONL record: task, p, subgroup_order, params, witnesses, exhaustive,
/// nodes, elapsed_ms, then variant, clique / oracle_agrees when present. Every witness
/// is recomputed through the set compositions first (InternalMismatch if not).
Json report_record(const SearchReport & report, bool timing);

void write_line(std::ostream & out, const Json & record);

} // namespace shiftdec
