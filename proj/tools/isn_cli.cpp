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

// Command-line front end: isn {analyze,enforce,shapley,core,mcnet} <file>.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "isn/error.hpp"
#include "isn/game.hpp"
#include "isn/report.hpp"
#include "isn/scenario_io.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBound = 3;

struct Options {
  std::string path;
  std::string format = "text";
  std::string epsilon = "1";
};

void AddCommon(CLI::App* cmd, Options& opts) {
  cmd->add_option("file", opts.path, "scenario JSON file")->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void WarnIfNotSuperadditive(const isn::LoadedScenario& scenario) {
  const auto verdict = isn::CheckSuperadditive(scenario.game.table());
  if (verdict.holds) return;
  std::cerr << "warning: game is not superadditive: "
            << isn::CoalitionLabel(scenario.agents, verdict.counterexample->first)
            << " and "
            << isn::CoalitionLabel(scenario.agents, verdict.counterexample->second)
            << " lose value by merging\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Industrial symbiosis games: fairness, stability and "
               "regulatory incentives"};
  app.require_subcommand(1);
  Options opts;

  auto* analyze = app.add_subcommand("analyze", "values, Shapley, core, implementability");
  auto* enforce = app.add_subcommand("enforce", "synthesize incentives for the policy");
  auto* shapley = app.add_subcommand("shapley", "Shapley allocation");
  auto* core = app.add_subcommand("core", "core non-emptiness with a witness");
  auto* mcnet = app.add_subcommand("mcnet", "dump the MC-Net transformation");
  for (auto* cmd : {analyze, enforce, shapley, core, mcnet}) AddCommon(cmd, opts);
  enforce->add_option("--epsilon", opts.epsilon,
                      "margin below zero for prohibited groups (e.g. 1, 1/2, 0.25)");

  CLI11_PARSE(app, argc, argv);

  try {
    const isn::LoadedScenario scenario = isn::LoadScenario(opts.path);
    WarnIfNotSuperadditive(scenario);
    const auto format =
        opts.format == "json" ? isn::ReportFormat::kJson : isn::ReportFormat::kText;
    if (analyze->parsed()) {
      std::cout << isn::RenderAnalyze(scenario, format);
    } else if (enforce->parsed()) {
      std::cout << isn::RenderEnforce(scenario, isn::ParseMoney(opts.epsilon), format);
    } else if (shapley->parsed()) {
      std::cout << isn::RenderShapley(scenario, format);
    } else if (core->parsed()) {
      std::cout << isn::RenderCore(scenario, format);
    } else {
      std::cout << isn::RenderMcnet(scenario, format);
    }
  } catch (const isn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == isn::ErrorCode::kBoundExceeded ? kExitBound
                                                      : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
