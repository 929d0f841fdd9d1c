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

#include "metrics/report.h"

#include <cstdio>
#include <sstream>

namespace adcop {
namespace {

std::string Real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string Param(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", *v);
  return buf;
}

// Status text may carry diagnostics; keep the row parseable.
std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string Prefix(const RowContext& c, const std::string& algorithm) {
  std::ostringstream os;
  os << algorithm << ',' << c.preset << ',' << (c.seed ? std::to_string(*c.seed) : "") << ','
     << c.n << ',' << c.k << ',' << Param(c.p1) << ',' << Param(c.p2);
  return os.str();
}

}  // namespace

std::string FormatCost(Cost cost) {
  return cost == kInfiniteCost ? "inf" : std::to_string(cost);
}

std::string CsvHeader() {
  return "algorithm,preset,seed,n,k,p1,p2,cost,optimal_cost,nclo,messages,"
         "avg_privacy_loss,max_privacy_gain,cycles_to_converge,status";
}

std::string CsvRow(const RowContext& context, const RunReport& r) {
  std::ostringstream os;
  os << Prefix(context, r.algorithm) << ','
     << (r.assignment.empty() ? "" : FormatCost(r.cost)) << ','
     << (r.optimal_cost ? FormatCost(*r.optimal_cost) : "") << ',' << r.nclo << ','
     << r.messages.sent << ',' << Real(r.avg_privacy_loss) << ',' << Real(r.max_privacy_gain)
     << ',' << (r.cycles_to_converge >= 0 ? std::to_string(r.cycles_to_converge) : "") << ','
     << Quote(r.status);
  return os.str();
}

std::string CsvErrorRow(const RowContext& context, const std::string& algorithm,
                        const std::string& status) {
  return Prefix(context, algorithm) + ",,,,,,,," + Quote(status);
}

std::vector<std::pair<int, Cost>> AnytimeTrace(const RunReport& report) {
  std::vector<std::pair<int, Cost>> out;
  out.reserve(report.cost_trace.size());
  for (std::size_t t = 0; t < report.cost_trace.size(); ++t) {
    out.emplace_back(static_cast<int>(t), report.cost_trace[t]);
  }
  return out;
}

}  // namespace adcop
