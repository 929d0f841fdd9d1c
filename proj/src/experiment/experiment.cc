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

#include "experiment/experiment.h"

#include <cstdio>
#include <map>
#include <sstream>

#include "common/error.h"
#include "generators/generators.h"

namespace adcop {

RowContext ContextFor(const GeneratorSpec& spec, std::uint64_t seed) {
  RowContext c;
  c.preset = spec.preset;
  c.seed = seed;
  c.n = spec.n();
  c.k = spec.k();
  switch (spec.family) {
    case Family::kMaxDiscsp:
      c.p1 = spec.discsp.p1;
      c.p2 = spec.discsp.p2;
      break;
    case Family::kGame:
      if (spec.game.mean_degree < 0) c.p1 = spec.game.edge_probability;
      c.p2 = spec.game.costs.zero_probability;
      break;
    case Family::kScaleFree:
      c.p2 = spec.scale_free.costs.zero_probability;
      break;
  }
  return c;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  ExperimentResult result;
  std::ostringstream csv;
  csv << CsvHeader() << '\n';
  struct Sums {
    AlgorithmSummary s;
    int finite = 0;
  };
  std::map<std::string, Sums> sums;
  for (int i = 0; i < config.seeds; ++i) {
    const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
    const RowContext context = ContextFor(config.spec, seed);
    Instance instance;
    std::string gen_error;
    try {
      instance = Generate(config.spec, seed);
    } catch (const Error& e) {
      gen_error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    }
    for (const auto& algo : config.algorithms) {
      Sums& acc = sums[algo];
      acc.s.algorithm = algo;
      ++acc.s.runs;
      if (!gen_error.empty()) {
        ++acc.s.failures;
        csv << CsvErrorRow(context, algo, gen_error) << '\n';
        continue;
      }
      try {
        const RunReport r = RunAlgorithm(algo, instance, config.ParamsFor(algo, seed));
        csv << CsvRow(context, r) << '\n';
        if (!r.assignment.empty() && r.cost != kInfiniteCost) {
          ++acc.finite;
          acc.s.cost += static_cast<double>(r.cost);
        }
        acc.s.nclo += static_cast<double>(r.nclo);
        acc.s.messages += static_cast<double>(r.messages.sent);
        acc.s.avg_privacy_loss += r.avg_privacy_loss;
        acc.s.max_privacy_gain += r.max_privacy_gain;
      } catch (const Error& e) {
        ++acc.s.failures;
        csv << CsvErrorRow(context, algo, std::string(ErrorCodeName(e.code())) + ": " + e.what())
            << '\n';
      }
    }
  }
  result.csv = csv.str();
  for (const auto& algo : config.algorithms) {
    Sums acc = sums[algo];
    const int ok = acc.s.runs - acc.s.failures;
    if (acc.finite > 0) acc.s.cost /= acc.finite;
    if (ok > 0) {
      acc.s.nclo /= ok;
      acc.s.messages /= ok;
      acc.s.avg_privacy_loss /= ok;
      acc.s.max_privacy_gain /= ok;
    }
    result.summary.push_back(acc.s);
  }
  return result;
}

std::string FormatSummary(const std::vector<AlgorithmSummary>& summary) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof(line), "%-16s %5s %5s %12s %14s %12s %9s %9s\n", "algorithm", "runs",
                "fail", "mean_cost", "mean_nclo", "mean_msgs", "loss%", "gain%");
  os << line;
  for (const auto& s : summary) {
    std::snprintf(line, sizeof(line), "%-16s %5d %5d %12.3f %14.1f %12.1f %9.3f %9.3f\n",
                  s.algorithm.c_str(), s.runs, s.failures, s.cost, s.nclo, s.messages,
                  s.avg_privacy_loss, s.max_privacy_gain);
    os << line;
  }
  return os.str();
}

}  // namespace adcop
