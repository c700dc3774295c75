// Copyright 2026 The ISN Coordination Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISN_REPORT_HPP
#define ISN_REPORT_HPP

#include <string>

#include "isn/money.hpp"
#include "isn/scenario_io.hpp"

namespace isn {

enum class ReportFormat { kText, kJson };

// Every renderer is deterministic: coalitions appear in ascending subset-mask
// order, agents in roster order, rationals in lowest terms.

/// Values, superadditivity, Shapley allocation, core result and the
/// implementability verdict.
std::string RenderAnalyze(const LoadedScenario& scenario, ReportFormat format);
std::string RenderShapley(const LoadedScenario& scenario, ReportFormat format);
std::string RenderCore(const LoadedScenario& scenario, ReportFormat format);
/// The ISN-to-MC-Net transformation, one rule per line.
std::string RenderMcnet(const LoadedScenario& scenario, ReportFormat format);

/// Synthesized incentives, coordinated values and per-group verdicts. Throws
/// kValidationError when the scenario has no policy section.
std::string RenderEnforce(const LoadedScenario& scenario, const Money& epsilon,
                          ReportFormat format);

}  // namespace isn

#endif  // ISN_REPORT_HPP
