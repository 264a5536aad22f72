#pragma once

#include <string>

#include "fraczeta/core.hpp"
#include "fraczeta/report.hpp"

namespace fraczeta {

// 17 significant digits: guarantees binary64 round-trip.
std::string fmt17(double x);

std::string json_escape(const std::string& s);
std::string to_json(const Complex& z);       // {"re": ..., "im": ...}
std::string to_json(const MethodResult& r);
std::string to_json(const ResidualReport& r);
std::string to_json(const EvalPoint& p);

// machine-readable error record for the CLI's exit-2 path
std::string error_json(const std::string& kind, const std::string& message);

}  // namespace fraczeta
