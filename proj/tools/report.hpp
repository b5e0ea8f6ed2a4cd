#pragma once

// JSON rendering of pipeline results; the text format is derived from it.

#include "shcalc/pipeline.hpp"

#include <json.hpp>
#include <string>

namespace shcalc::report {

using nlohmann::json;

json presentation_json(const RingPresentation& pres);
json matrix_json(const LambdaMatrix& m);
json result_json(const ShResult& result);
std::string result_text(const json& result);

}  // namespace shcalc::report
