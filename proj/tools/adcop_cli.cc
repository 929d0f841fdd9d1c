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

// Command-line driver: gen, solve, experiment and transform.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adcop/adcop.h"

namespace {

enum Exit { kOk = 0, kUsage = 2, kParseFailure = 3, kRuntime = 4 };

int ExitFor(adcop_status s) {
  switch (s) {
    case ADCOP_OK: return kOk;
    case ADCOP_ERR_CONFIG:
    case ADCOP_ERR_UNKNOWN_ALGORITHM:
    case ADCOP_ERR_INVALID_ARGUMENT:
    case ADCOP_ERR_UNSOUND_PENALTY:
      return kUsage;
    case ADCOP_ERR_PARSE: return kParseFailure;
    default: return kRuntime;
  }
}

struct Failure {
  int code;
};

void Check(adcop_status s, const std::string& context) {
  if (s == ADCOP_OK) return;
  std::cerr << "error: " << context << ": " << adcop_last_error() << " ("
            << adcop_status_name(s) << ")\n";
  throw Failure{ExitFor(s)};
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using Config = Handle<adcop_config, adcop_config_free>;
using InstanceH = Handle<adcop_instance, adcop_instance_free>;
using Report = Handle<adcop_report, adcop_report_free>;
using Experiment = Handle<adcop_experiment, adcop_experiment_free>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { adcop_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

// Flags shared by the subcommands; unset ones leave the config untouched.
struct Flags {
  std::optional<std::string> preset, algo, policy, trace_out, cost_trace, config;
  std::optional<double> n, k, p1, p2, degree, p, coord_c, threshold;
  std::optional<int> cycles, seeds;
  std::optional<unsigned long long> seed;
  std::string out;
};

void AddGenerator(CLI::App* cmd, Flags& f) {
  cmd->add_option("--preset", f.preset, "instance preset");
  cmd->add_option("--n", f.n, "number of agents");
  cmd->add_option("--k", f.k, "domain size");
  cmd->add_option("--p1", f.p1, "constraint density");
  cmd->add_option("--p2", f.p2, "constraint tightness");
  cmd->add_option("--degree", f.degree, "mean degree (games)");
  cmd->add_option("--seed", f.seed, "base seed");
}

void AddSolver(CLI::App* cmd, Flags& f) {
  cmd->add_option("--cycles", f.cycles, "local-search cycles");
  cmd->add_option("--p", f.p, "replacement probability");
  cmd->add_option("--coord-c", f.coord_c, "ACLS coordination weight");
  cmd->add_option("--threshold", f.threshold, "privacy cap in percent");
  cmd->add_option("--policy", f.policy, "delivery order: fifo or shuffle");
}

void Set(adcop_config* c, const char* key, const std::string& value) {
  Check(adcop_config_set(c, key, value.c_str()), std::string("--") + key);
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void Apply(adcop_config* c, const Flags& f) {
  if (f.preset) Set(c, "preset", *f.preset);
  if (f.n) Set(c, "n", Num(*f.n));
  if (f.k) Set(c, "k", Num(*f.k));
  if (f.p1) Set(c, "p1", Num(*f.p1));
  if (f.p2) Set(c, "p2", Num(*f.p2));
  if (f.degree) Set(c, "degree", Num(*f.degree));
  if (f.algo) Set(c, "algorithms", *f.algo);
  if (f.seeds) Set(c, "seeds", std::to_string(*f.seeds));
  if (f.seed) Set(c, "seed", std::to_string(*f.seed));
  if (f.cycles) Set(c, "cycles", std::to_string(*f.cycles));
  if (f.p) Set(c, "p", Num(*f.p));
  if (f.coord_c) Set(c, "coord_c", Num(*f.coord_c));
  if (f.threshold) Set(c, "threshold", Num(*f.threshold));
  if (f.policy) Set(c, "policy", *f.policy);
  if (f.trace_out) Set(c, "trace", *f.trace_out);
  if (!f.out.empty()) Set(c, "out", f.out);
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{kRuntime};
  }
}

void PrintStats(const adcop_instance* instance) {
  adcop_instance_stats s;
  Check(adcop_instance_stats_get(instance, &s), "stats");
  std::printf("n=%d k=%d constraints=%d edges=%d density=%.4f connected=%s\n", s.num_agents,
              s.max_domain_size, s.num_constraints, s.edges, s.density,
              s.connected ? "yes" : "no");
}

int Gen(const Flags& f) {
  Config config;
  Check(adcop_config_new(&config.p), "config");
  Apply(config.p, f);
  InstanceH instance;
  Check(adcop_instance_generate(config.p, f.seed.value_or(0), &instance.p), "gen");
  OwnedString text;
  Check(adcop_instance_format(instance.p, &text.p), "format");
  if (f.out.empty()) {
    std::cout << text.str();
  } else {
    Check(adcop_instance_write(instance.p, f.out.c_str()), "write");
  }
  if (!f.out.empty()) PrintStats(instance.p);
  return kOk;
}

int Solve(const std::string& path, const Flags& f) {
  if (!f.algo) {
    std::cerr << "error: --algo is required\n";
    return kUsage;
  }
  Config config;
  Check(adcop_config_new(&config.p), "config");
  Apply(config.p, f);
  InstanceH instance;
  Check(adcop_instance_read(path.c_str(), &instance.p), path);
  Report report;
  Check(adcop_solve(instance.p, f.algo->c_str(), config.p, f.seed.value_or(0), &report.p),
        *f.algo);
  OwnedString row, summary;
  Check(adcop_report_csv_row(report.p, "",
                             f.seed ? static_cast<long long>(*f.seed) : -1, &row.p),
        "csv");
  Check(adcop_report_summary(report.p, &summary.p), "summary");
  const std::string csv = std::string(adcop_csv_header()) + "\n" + row.str() + "\n";
  if (f.out.empty()) {
    std::cout << csv;
  } else {
    WriteText(f.out, csv);
  }
  if (f.cost_trace) {
    OwnedString trace;
    Check(adcop_report_cost_trace(report.p, &trace.p), "cost trace");
    WriteText(*f.cost_trace, trace.str());
  }
  std::cerr << summary.str();
  return kOk;
}

int RunExperiment(const Flags& f) {
  Config config;
  if (f.config) {
    Check(adcop_config_load(f.config->c_str(), &config.p), *f.config);
  } else {
    Check(adcop_config_new(&config.p), "config");
  }
  Apply(config.p, f);
  Experiment experiment;
  Check(adcop_experiment_run(config.p, &experiment.p), "experiment");
  OwnedString out;
  Check(adcop_config_get_out(config.p, &out.p), "config");
  if (out.str().empty()) {
    std::cout << adcop_experiment_csv(experiment.p);
  } else {
    WriteText(out.str(), adcop_experiment_csv(experiment.p));
  }
  std::cerr << adcop_experiment_summary(experiment.p);
  return kOk;
}

int Transform(const std::string& path, const std::string& kind, long long penalty,
              const Flags& f) {
  InstanceH instance;
  Check(adcop_instance_read(path.c_str(), &instance.p), path);
  InstanceH result;
  if (kind == "peav") {
    Check(adcop_instance_to_peav(instance.p, penalty, &result.p), "peav");
  } else if (kind == "aggregate") {
    Check(adcop_instance_aggregate(instance.p, &result.p), "aggregate");
  } else {
    std::cerr << "error: unknown transform '" << kind << "'\n";
    return kUsage;
  }
  OwnedString text;
  Check(adcop_instance_format(result.p, &text.p), "format");
  if (f.out.empty()) {
    std::cout << text.str();
  } else {
    WriteText(f.out, text.str());
    PrintStats(result.p);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymmetric distributed constraint optimization toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "adcop 0.1.0");
  Flags f;

  auto* gen = app.add_subcommand("gen", "generate an instance");
  AddGenerator(gen, f);
  gen->add_option("--out", f.out, "output file (stdout when omitted)");

  std::string instance_path;
  auto* solve = app.add_subcommand("solve", "run one algorithm on an instance file");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--algo", f.algo, std::string("algorithm: ") + adcop_algorithm_names());
  solve->add_option("--seed", f.seed, "run seed");
  solve->add_option("--out", f.out, "CSV output file");
  solve->add_option("--trace-out", f.trace_out, "message trace file");
  solve->add_option("--cost-trace", f.cost_trace, "per-cycle cycle,cost CSV file");
  AddSolver(solve, f);

  auto* exp = app.add_subcommand("experiment", "run an algorithm suite over seeded instances");
  exp->add_option("--config", f.config, "INI config file");
  exp->add_option("--algo", f.algo, "comma-separated algorithms");
  exp->add_option("--seeds", f.seeds, "number of instances");
  exp->add_option("--out", f.out, "CSV output file");
  AddGenerator(exp, f);
  AddSolver(exp, f);

  std::string kind = "peav";
  long long penalty = 0;
  auto* transform = app.add_subcommand("transform", "reformulate an instance");
  transform->add_option("instance", instance_path, "instance file")->required();
  auto* to = transform->add_option("--to", kind, "peav or aggregate");
  auto* peav = transform->add_flag_callback("--peav", [&] { kind = "peav"; }, "PEAV reformulation");
  auto* aggregate =
      transform->add_flag_callback("--aggregate", [&] { kind = "aggregate"; }, "merge sides");
  peav->excludes(aggregate);
  to->excludes(peav)->excludes(aggregate);
  transform->add_option("--penalty", penalty, "PEAV equality penalty (default when omitted)");
  transform->add_option("--out", f.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*gen) return Gen(f);
    if (*solve) return Solve(instance_path, f);
    if (*exp) return RunExperiment(f);
    if (*transform) return Transform(instance_path, kind, penalty, f);
  } catch (const Failure& failure) {
    return failure.code;
  }
  return kUsage;
}
