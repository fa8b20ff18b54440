#pragma once

#include <string>

#include "json.hpp"

#include "fht/function.hpp"
#include "fht/verify.hpp"

namespace fht {

// Load a sampled function from CSV: header line `x,value`, then rows with x
// strictly increasing inside (-1,1). The handle interpolates linearly and
// extends by the boundary values; sample nodes become breakpoints so the
// quadrature engine splits panels at the kinks. Throws ParseError with the
// offending line on malformed input.
FunctionHandle load_csv_function(const std::string& path);

// Serialization of verification reports. cases[] carry the statement, the
// inputs, the residual (or margin), the tolerance and the verdict; summary
// counts pass/fail. wall_time is the one field excluded from byte-for-byte
// reproducibility comparisons.
nlohmann::json report_json(const VerificationReport& rep);

// Full CLI document: {tool_version, command, seed, cases[], summary{pass,fail}}.
nlohmann::json report_document(const VerificationReport& rep,
                               const std::string& command);

std::string report_csv(const VerificationReport& rep);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace fht
