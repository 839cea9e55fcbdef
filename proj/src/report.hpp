#pragma once

#include <string>

#include "json.hpp"

#include "errors.hpp"
#include "factored.hpp"

namespace entropia {

/// JSON renderings of exact values; the factored form round-trips exactly,
/// the float rendering is display-only (natural log, 12 significant digits).
nlohmann::json factored_json(const Factored& f);
nlohmann::json value_json(const EntropyValue& v);
nlohmann::json index_json(const Index& ix);
Factored factored_from_json(const nlohmann::json& j);
EntropyValue value_from_json(const nlohmann::json& j);

/// Execute one request: {"command": "entropy"|"table"|"check"|"sweep"|
/// "describe", "which": ..., "n": ..., "scenario": {...}} and return the
/// report, including an "exit_code" field.  Throws Error on input or
/// engine failures.
nlohmann::json run_request(const nlohmann::json& request);

/// Exit code convention: 0 ok, 1 violation, 2 hypothesis failure,
/// 3 input error, 4 budget exceeded.
int exit_code_for(ErrorCode code);

} // namespace entropia
