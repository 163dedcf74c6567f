/*
   Copyright 2026 The wildaut authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WILDAUT_REPORT_HPP
#define WILDAUT_REPORT_HPP

#include <json.hpp>

#include "wildaut/analysis.hpp"

namespace wildaut {

inline constexpr const char* kReportSchema = "wildaut-report/1";

using ojson = nlohmann::ordered_json;

// Versioned, byte-deterministic report document for one analyzed cover.
ojson report_json(const CoverAnalysis& A, const std::string& input_text);

// Human-readable trace mirroring the reference computation: reduction,
// F(X,Y), P mod Ad, Ad, the s-polynomial and its gcd with Ad, the epsilon
// identity, and the group profile.
std::string report_text(const CoverAnalysis& A, const std::string& input_text);

}  // namespace wildaut

#endif
