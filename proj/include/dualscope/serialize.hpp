// serialize.hpp
// JSON/TSV serialization for the report types. Keys come out sorted
// (nlohmann::json's default object ordering), rationals as exact "num/den"
// strings, so identical inputs always produce byte-identical output.

#pragma once

#include <string>

#include <json.hpp>

#include "dualscope/duality.hpp"
#include "dualscope/fielddescent.hpp"
#include "dualscope/obstruction.hpp"

namespace dualscope {

using json = nlohmann::json;

json to_json(const FactoredInt& n);
json to_json(const Premise& p);
json to_json(const Verdict& v);
json to_json(const DualityReport& r);
json to_json(const DualPairOrbit& o);
json to_json(const SplittingData& s);
json to_json(const CensusReport& r);

std::string census_tsv(const CensusReport& r);

// Re-validates a serialized verdict: replays every premise arithmetically
// and re-runs the elimination to confirm outcome, criterion, and premise
// booleans are reproduced from N alone.
struct TraceCheck {
    bool valid = false;
    i64 premises_checked = 0;
    std::string error;
};
TraceCheck verify_trace(const json& verdict);

}  // namespace dualscope
