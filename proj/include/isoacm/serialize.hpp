#pragma once

#include <json.hpp>
#include <ostream>

#include "isoacm/acm_engine.hpp"
#include "isoacm/bbw_oracle.hpp"
#include "isoacm/step_matrix.hpp"

namespace isoacm {

/// {"num": 5, "den": 2} with den in {1, 2}.
nlohmann::json to_json(const HalfInt& h);

nlohmann::json to_json(const WeightFW& w);

/// {"type","n","k","lambda",["P","Q","R" | "T"],"layout","M"}.
nlohmann::json to_json(const StepMatrix& sm);

nlohmann::json to_json(const FlagSpace& space, const WeightFW& input_lambda, const AcmVerdict& v);

nlohmann::json to_json(const FlagSpace& space, const WeightFW& lambda, Int t,
                       const CohomologyResult& c);

/// One JSON record per weight:
/// {"lambda":[...],"acm_theorem":b,"acm_oracle":b,"M":{...},"dim":n}.
void write_jsonl(const EquivalenceReport& report, std::ostream& out);

}  // namespace isoacm
