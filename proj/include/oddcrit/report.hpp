#pragma once

#include <json.hpp>
#include <string>

#include "oddcrit/factors.hpp"
#include "oddcrit/theorems.hpp"

namespace oddcrit {

// Rounds to 12 significant digits so serialised reports are byte-stable.
double round12(double x);

nlohmann::ordered_json to_json(const TheoremVerdict& v);
nlohmann::ordered_json to_json(const CriticalityVerdict& v);
nlohmann::ordered_json to_json(const SweepRecord& r);
nlohmann::ordered_json to_json(const SweepReport& r);

std::string to_csv(const SweepReport& r);
// Fixed-width human summary, one row per record.
std::string to_table(const SweepReport& r);

}  // namespace oddcrit
