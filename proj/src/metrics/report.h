// Copyright 2026 The adcop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADCOP_METRICS_REPORT_H_
#define ADCOP_METRICS_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "model/instance.h"
#include "simnet/network.h"

namespace adcop {

struct RunReport {
  std::string algorithm;
  // Best full assignment found; empty when none was reached.
  Assignment assignment;
  // evaluate_global of `assignment` on the pristine instance.
  Cost cost = kInfiniteCost;
  // Cost the solver itself believed (differs from `cost` for one-sided
  // search).
  Cost claimed_cost = kInfiniteCost;
  std::optional<Cost> optimal_cost;
  std::int64_t nclo = 0;
  MessageCounts messages;
  // Global cost after each cycle, entry 0 being the initial assignment.
  std::vector<Cost> cost_trace;
  int cycles_to_converge = -1;
  double avg_privacy_loss = 0;
  double max_privacy_gain = 0;
  std::vector<double> agent_gain;
  // Complete search bookkeeping.
  std::vector<Cost> bound_history;
  std::vector<std::vector<int>> explored;
  bool halted_by_privacy = false;
  // Local search bookkeeping.
  std::int64_t transfers = 0;
  int cost_increasing_cycles = 0;
  std::string status = "ok";
};

// Context columns of a CSV row that do not come from the run itself.
struct RowContext {
  std::string preset;
  std::optional<std::uint64_t> seed;
  int n = 0;
  int k = 0;
  std::optional<double> p1;
  std::optional<double> p2;
};

std::string CsvHeader();
std::string CsvRow(const RowContext& context, const RunReport& report);
// Row for a run that failed before producing a report.
std::string CsvErrorRow(const RowContext& context, const std::string& algorithm,
                        const std::string& status);

// (cycle, cost) pairs of a local-search run.
std::vector<std::pair<int, Cost>> AnytimeTrace(const RunReport& report);

std::string FormatCost(Cost cost);

}  // namespace adcop

#endif  // ADCOP_METRICS_REPORT_H_
