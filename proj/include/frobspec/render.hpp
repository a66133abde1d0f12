#pragma once

#include "frobspec/census.hpp"
#include "frobspec/classify.hpp"
#include "frobspec/scan.hpp"

#include "json.hpp"

#include <string>

namespace frobspec {

using Json = nlohmann::ordered_json;

// All emitters are deterministic: fixed key order, no timestamps, numeric
// arrays sorted the way the underlying structs carry them.

Json report_json(const FrobeniusReport& r);
Json verdict_json(const Verdict& v);
Json census_json(const OrderCensus& c);
Json scan_json(const ScanReport& r);

std::string report_table(const FrobeniusReport& r);
std::string verdict_table(const Verdict& v);
std::string census_table(const OrderCensus& c);
std::string scan_table(const ScanReport& r);

} // namespace frobspec
