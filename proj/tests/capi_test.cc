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

#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include "adcop/adcop.h"

namespace {

constexpr char kPairExample[] =
    "adcop 2 2\n"
    "var 1 1 2\n"
    "var 2 2 2\n"
    "con 1 2\n"
    "3 6\n7 9\n"
    "4 1\n2 8\n";

struct Owned {
  char* p = nullptr;
  ~Owned() { adcop_string_free(p); }
};

TEST(CApi, ParseSolveAndReport) {
  adcop_instance* inst = nullptr;
  ASSERT_EQ(adcop_instance_parse(kPairExample, &inst), ADCOP_OK);
  adcop_instance_stats s;
  ASSERT_EQ(adcop_instance_stats_get(inst, &s), ADCOP_OK);
  EXPECT_EQ(s.num_agents, 2);
  EXPECT_EQ(s.num_constraints, 1);
  EXPECT_EQ(s.connected, 1);
  EXPECT_EQ(s.symmetric, 0);

  adcop_report* r = nullptr;
  ASSERT_EQ(adcop_solve(inst, "syncabb", nullptr, 0, &r), ADCOP_OK);
  std::int64_t cost = -1, optimum = -1;
  ASSERT_EQ(adcop_report_cost(r, &cost), 1);
  ASSERT_EQ(adcop_report_optimal_cost(r, &optimum), 1);
  EXPECT_EQ(cost, 7);
  EXPECT_EQ(optimum, 7);
  int values[4] = {-1, -1, -1, -1};
  EXPECT_EQ(adcop_report_assignment(r, values, 4), 2u);
  EXPECT_EQ(values[0], 0);
  EXPECT_EQ(values[1], 0);
  EXPECT_GT(adcop_report_messages(r), 0);
  Owned row;
  ASSERT_EQ(adcop_report_csv_row(r, "fig", 5, &row.p), ADCOP_OK);
  EXPECT_EQ(std::string(row.p).rfind("syncabb,fig,5,2,2,", 0), 0u);
  adcop_report_free(r);
  adcop_instance_free(inst);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  adcop_instance* inst = nullptr;
  EXPECT_EQ(adcop_instance_parse("adcop 2\nnonsense\n", &inst), ADCOP_ERR_PARSE);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(adcop_last_error()), "");
  EXPECT_EQ(adcop_instance_read("/nonexistent/x.dcop", &inst), ADCOP_ERR_IO);
  EXPECT_EQ(adcop_instance_parse(nullptr, &inst), ADCOP_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(adcop_instance_parse(kPairExample, &inst), ADCOP_OK);
  adcop_report* r = nullptr;
  EXPECT_EQ(adcop_solve(inst, "simplex", nullptr, 0, &r), ADCOP_ERR_UNKNOWN_ALGORITHM);
  adcop_instance* peav = nullptr;
  EXPECT_EQ(adcop_instance_to_peav(inst, 17, &peav), ADCOP_ERR_UNSOUND_PENALTY);
  adcop_instance_free(inst);

  adcop_config* c = nullptr;
  ASSERT_EQ(adcop_config_new(&c), ADCOP_OK);
  EXPECT_EQ(adcop_config_set(c, "preset", "nowhere"), ADCOP_ERR_CONFIG);
  EXPECT_EQ(adcop_config_set(c, "warp", "1"), ADCOP_ERR_CONFIG);
  adcop_experiment* e = nullptr;
  EXPECT_EQ(adcop_experiment_run(c, &e), ADCOP_ERR_CONFIG);
  adcop_config_free(c);
  EXPECT_STREQ(adcop_status_name(ADCOP_ERR_CAP_EXCEEDED), "cap_exceeded");
}

TEST(CApi, TransformsRoundTrip) {
  adcop_instance* inst = nullptr;
  ASSERT_EQ(adcop_instance_parse(kPairExample, &inst), ADCOP_OK);
  adcop_instance *peav = nullptr, *agg = nullptr;
  ASSERT_EQ(adcop_instance_to_peav(inst, 0, &peav), ADCOP_OK);
  ASSERT_EQ(adcop_instance_aggregate(inst, &agg), ADCOP_OK);
  adcop_instance_stats s;
  ASSERT_EQ(adcop_instance_stats_get(peav, &s), ADCOP_OK);
  EXPECT_EQ(s.num_variables, 4);
  EXPECT_EQ(s.symmetric, 1);
  Owned text;
  ASSERT_EQ(adcop_instance_format(agg, &text.p), ADCOP_OK);
  adcop_instance* again = nullptr;
  ASSERT_EQ(adcop_instance_parse(text.p, &again), ADCOP_OK);
  Owned text2;
  ASSERT_EQ(adcop_instance_format(again, &text2.p), ADCOP_OK);
  EXPECT_STREQ(text.p, text2.p);
  adcop_peav_size size;
  ASSERT_EQ(adcop_instance_peav_size(inst, &size), ADCOP_OK);
  EXPECT_EQ(size.variables, 4);
  for (auto* p : {inst, peav, agg, again}) adcop_instance_free(p);
}

TEST(CApi, ExperimentIsDeterministic) {
  adcop_config* c = nullptr;
  ASSERT_EQ(adcop_config_new(&c), ADCOP_OK);
  ASSERT_EQ(adcop_config_set(c, "preset", "setup3-games"), ADCOP_OK);
  ASSERT_EQ(adcop_config_set(c, "algorithms", "atwb,mgm"), ADCOP_OK);
  ASSERT_EQ(adcop_config_set(c, "seeds", "3"), ADCOP_OK);
  ASSERT_EQ(adcop_config_set(c, "cycles", "20"), ADCOP_OK);
  adcop_experiment *a = nullptr, *b = nullptr;
  ASSERT_EQ(adcop_experiment_run(c, &a), ADCOP_OK);
  ASSERT_EQ(adcop_experiment_run(c, &b), ADCOP_OK);
  EXPECT_STREQ(adcop_experiment_csv(a), adcop_experiment_csv(b));
  EXPECT_EQ(adcop_experiment_failures(a), 0);
  adcop_experiment_free(a);
  adcop_experiment_free(b);
  adcop_config_free(c);
}

TEST(CApi, LocalCostTrace) {
  adcop_config* c = nullptr;
  ASSERT_EQ(adcop_config_new(&c), ADCOP_OK);
  ASSERT_EQ(adcop_config_set(c, "cycles", "4"), ADCOP_OK);
  adcop_instance* inst = nullptr;
  ASSERT_EQ(adcop_instance_generate(c, 2, &inst), ADCOP_OK);
  adcop_report* r = nullptr;
  ASSERT_EQ(adcop_solve(inst, "dsa", c, 2, &r), ADCOP_OK);
  Owned trace;
  ASSERT_EQ(adcop_report_cost_trace(r, &trace.p), ADCOP_OK);
  const std::string t = trace.p;
  EXPECT_EQ(t.rfind("cycle,cost\n0,", 0), 0u);
  EXPECT_NE(t.find("\n4,"), std::string::npos);
  adcop_report_free(r);
  adcop_instance_free(inst);
  adcop_config_free(c);
}

TEST(CApi, NullHandlesAreSafe) {
  adcop_instance_free(nullptr);
  adcop_report_free(nullptr);
  adcop_config_free(nullptr);
  adcop_experiment_free(nullptr);
  adcop_string_free(nullptr);
  EXPECT_NE(std::string(adcop_algorithm_names()).find("atwb"), std::string::npos);
  EXPECT_NE(std::string(adcop_preset_names()).find("setup1-desk"), std::string::npos);
}

}  // namespace
