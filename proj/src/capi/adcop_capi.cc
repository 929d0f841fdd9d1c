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

#include "adcop/adcop.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <queue>
#include <sstream>
#include <string>

#include "common/error.h"
#include "experiment/algorithms.h"
#include "experiment/config.h"
#include "experiment/experiment.h"
#include "generators/generators.h"
#include "model/io.h"
#include "transforms/transforms.h"

struct adcop_instance {
  adcop::Instance value;
};

struct adcop_report {
  adcop::RunReport value;
  int n = 0;
  int k = 0;
};

struct adcop_config {
  adcop::ExperimentConfig value;
  bool oracle = true;
  std::string trace;
};

struct adcop_experiment {
  adcop::ExperimentResult value;
  std::string summary;
  int failures = 0;
};

namespace {

using adcop::ErrorCode;

thread_local std::string last_error;

adcop_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return ADCOP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDomain: return ADCOP_ERR_DOMAIN;
    case ErrorCode::kNotFound: return ADCOP_ERR_NOT_FOUND;
    case ErrorCode::kPrecondition: return ADCOP_ERR_PRECONDITION;
    case ErrorCode::kParse: return ADCOP_ERR_PARSE;
    case ErrorCode::kIo: return ADCOP_ERR_IO;
    case ErrorCode::kCapExceeded: return ADCOP_ERR_CAP_EXCEEDED;
    case ErrorCode::kProtocol: return ADCOP_ERR_PROTOCOL;
    case ErrorCode::kRouting: return ADCOP_ERR_ROUTING;
    case ErrorCode::kUnsoundPenalty: return ADCOP_ERR_UNSOUND_PENALTY;
    case ErrorCode::kConfig: return ADCOP_ERR_CONFIG;
    case ErrorCode::kUnknownAlgorithm: return ADCOP_ERR_UNKNOWN_ALGORITHM;
  }
  return ADCOP_ERR_INTERNAL;
}

template <class F>
adcop_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return ADCOP_OK;
  } catch (const adcop::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return ADCOP_ERR_INTERNAL;
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) adcop::Fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double Number(const std::string& key, const char* value) {
  char* end = nullptr;
  const double v = std::strtod(value, &end);
  if (end == value || *end != '\0') {
    adcop::Fail(ErrorCode::kConfig, "bad number for '" + key + "': " + value);
  }
  return v;
}

int Integer(const std::string& key, const char* value) {
  const double v = Number(key, value);
  if (v != static_cast<int>(v)) adcop::Fail(ErrorCode::kConfig, key + " must be an integer");
  return static_cast<int>(v);
}

bool Connected(const adcop::Instance& instance) {
  const int n = instance.num_agents();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int count = 1;
  while (!frontier.empty()) {
    const int a = frontier.front();
    frontier.pop();
    for (adcop::AgentId b : adcop::Neighbors(instance, adcop::AgentId{a})) {
      if (!seen[b.index]) {
        seen[b.index] = true;
        ++count;
        frontier.push(b.index);
      }
    }
  }
  return count == n;
}

std::string Join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
  return out;
}

}  // namespace

extern "C" {

const char* adcop_last_error(void) { return last_error.c_str(); }

const char* adcop_status_name(adcop_status status) {
  switch (status) {
    case ADCOP_OK: return "ok";
    case ADCOP_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ADCOP_ERR_DOMAIN: return "domain";
    case ADCOP_ERR_NOT_FOUND: return "not_found";
    case ADCOP_ERR_PRECONDITION: return "precondition";
    case ADCOP_ERR_PARSE: return "parse";
    case ADCOP_ERR_IO: return "io";
    case ADCOP_ERR_CAP_EXCEEDED: return "cap_exceeded";
    case ADCOP_ERR_PROTOCOL: return "protocol";
    case ADCOP_ERR_ROUTING: return "routing";
    case ADCOP_ERR_UNSOUND_PENALTY: return "unsound_penalty";
    case ADCOP_ERR_CONFIG: return "config";
    case ADCOP_ERR_UNKNOWN_ALGORITHM: return "unknown_algorithm";
    case ADCOP_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void adcop_string_free(char* s) { std::free(s); }

adcop_status adcop_instance_parse(const char* text, adcop_instance** out) {
  return Guard([&] {
    Require(text, "text");
    Require(out, "out");
    *out = new adcop_instance{adcop::ParseInstance(text)};
  });
}

adcop_status adcop_instance_read(const char* path, adcop_instance** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new adcop_instance{adcop::ReadInstanceFile(path)};
  });
}

adcop_status adcop_instance_format(const adcop_instance* instance, char** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    *out = Copy(adcop::FormatInstance(instance->value));
  });
}

adcop_status adcop_instance_write(const adcop_instance* instance, const char* path) {
  return Guard([&] {
    Require(instance, "instance");
    Require(path, "path");
    adcop::WriteInstanceFile(instance->value, path);
  });
}

void adcop_instance_free(adcop_instance* instance) { delete instance; }

adcop_status adcop_instance_stats_get(const adcop_instance* instance, adcop_instance_stats* out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    const adcop::Instance& in = instance->value;
    out->num_agents = in.num_agents();
    out->num_variables = in.num_variables();
    out->max_domain_size = in.max_domain_size();
    out->num_constraints = in.num_constraints();
    out->edges = adcop::CountEdges(in);
    const double pairs = in.num_agents() * (in.num_agents() - 1) / 2.0;
    out->density = pairs > 0 ? out->edges / pairs : 0.0;
    out->connected = Connected(in) ? 1 : 0;
    out->symmetric = in.symmetric() ? 1 : 0;
  });
}

adcop_status adcop_instance_generate(const adcop_config* config, uint64_t seed,
                                     adcop_instance** out) {
  return Guard([&] {
    Require(config, "config");
    Require(out, "out");
    *out = new adcop_instance{adcop::Generate(config->value.spec, seed)};
  });
}

adcop_status adcop_instance_to_peav(const adcop_instance* instance, int64_t penalty,
                                    adcop_instance** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    adcop::PeavInstance peav = penalty > 0 ? adcop::ToPeav(instance->value, penalty)
                                           : adcop::ToPeav(instance->value);
    *out = new adcop_instance{std::move(peav.dcop)};
  });
}

adcop_status adcop_instance_aggregate(const adcop_instance* instance, adcop_instance** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    *out = new adcop_instance{adcop::AggregateSymmetric(instance->value)};
  });
}

adcop_status adcop_instance_peav_size(const adcop_instance* instance, adcop_peav_size* out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    const adcop::PeavSizeReport r = adcop::PeavSize(instance->value);
    out->variables = r.variable_count;
    out->constraints = r.constraint_count;
    out->density = r.density;
  });
}

adcop_status adcop_config_new(adcop_config** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new adcop_config{};
  });
}

adcop_status adcop_config_load(const char* path, adcop_config** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new adcop_config{adcop::LoadConfig(path), true, {}};
  });
}

void adcop_config_free(adcop_config* config) { delete config; }

adcop_status adcop_config_set(adcop_config* config, const char* key, const char* value) {
  return Guard([&] {
    Require(config, "config");
    Require(key, "key");
    Require(value, "value");
    adcop::ExperimentConfig& c = config->value;
    const std::string k = key;
    if (k == "preset") {
      c.spec = adcop::PresetSpec(value);
    } else if (k == "algorithms") {
      c.algorithms = adcop::SplitList(value);
    } else if (k == "seeds") {
      c.seeds = Integer(k, value);
    } else if (k == "seed") {
      const double v = Number(k, value);
      if (v < 0) adcop::Fail(ErrorCode::kConfig, "seed must be non-negative");
      c.base_seed = std::strtoull(value, nullptr, 10);
    } else if (k == "out") {
      c.out = value;
    } else if (k == "policy") {
      c.flags.policy = adcop::ParsePolicy(value);
    } else if (k == "cycles") {
      c.flags.cycles = Integer(k, value);
    } else if (k == "p") {
      c.flags.p = Number(k, value);
    } else if (k == "coord_c") {
      c.flags.coord_c = Number(k, value);
    } else if (k == "offer_probability") {
      c.flags.offer_probability = Number(k, value);
    } else if (k == "threshold") {
      c.flags.threshold = Number(k, value);
    } else if (k == "oracle") {
      config->oracle = Integer(k, value) != 0;
    } else if (k == "trace") {
      config->trace = value;
    } else {
      adcop::SetGeneratorParam(c.spec, k, Number(k, value));
    }
  });
}

adcop_status adcop_config_get_out(const adcop_config* config, char** out) {
  return Guard([&] {
    Require(config, "config");
    Require(out, "out");
    *out = Copy(config->value.out);
  });
}

adcop_status adcop_solve(const adcop_instance* instance, const char* algorithm,
                         const adcop_config* config, uint64_t seed, adcop_report** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(algorithm, "algorithm");
    Require(out, "out");
    adcop_config defaults;
    const adcop_config& c = config ? *config : defaults;
    adcop::AlgorithmParams params = c.value.ParamsFor(algorithm, seed);
    params.oracle = c.oracle;
    std::ofstream trace;
    if (!c.trace.empty()) {
      trace.open(c.trace);
      if (!trace) adcop::Fail(ErrorCode::kIo, "cannot write trace '" + c.trace + "'");
      params.trace = &trace;
    }
    auto report = std::make_unique<adcop_report>();
    report->value = adcop::RunAlgorithm(algorithm, instance->value, params);
    report->n = instance->value.num_agents();
    report->k = instance->value.max_domain_size();
    *out = report.release();
  });
}

void adcop_report_free(adcop_report* report) { delete report; }

int adcop_report_cost(const adcop_report* report, int64_t* cost) {
  if (report == nullptr || report->value.assignment.empty()) return 0;
  if (cost) *cost = report->value.cost;
  return 1;
}

int adcop_report_optimal_cost(const adcop_report* report, int64_t* cost) {
  if (report == nullptr || !report->value.optimal_cost) return 0;
  if (cost) *cost = *report->value.optimal_cost;
  return 1;
}

int64_t adcop_report_nclo(const adcop_report* report) { return report ? report->value.nclo : 0; }

int64_t adcop_report_messages(const adcop_report* report) {
  return report ? report->value.messages.sent : 0;
}

double adcop_report_privacy_loss(const adcop_report* report) {
  return report ? report->value.avg_privacy_loss : 0.0;
}

double adcop_report_privacy_gain(const adcop_report* report) {
  return report ? report->value.max_privacy_gain : 0.0;
}

size_t adcop_report_assignment(const adcop_report* report, int* values, size_t capacity) {
  if (report == nullptr) return 0;
  const auto& a = report->value.assignment;
  for (size_t i = 0; i < a.size() && i < capacity && values; ++i) values[i] = a[i];
  return a.size();
}

adcop_status adcop_report_csv_row(const adcop_report* report, const char* preset, int64_t seed,
                                  char** out) {
  return Guard([&] {
    Require(report, "report");
    Require(out, "out");
    adcop::RowContext c;
    c.preset = preset ? preset : "";
    if (seed >= 0) c.seed = static_cast<std::uint64_t>(seed);
    c.n = report->n;
    c.k = report->k;
    *out = Copy(adcop::CsvRow(c, report->value));
  });
}

adcop_status adcop_report_cost_trace(const adcop_report* report, char** out) {
  return Guard([&] {
    Require(report, "report");
    Require(out, "out");
    std::ostringstream os;
    os << "cycle,cost\n";
    for (const auto& [cycle, cost] : adcop::AnytimeTrace(report->value)) {
      os << cycle << ',' << adcop::FormatCost(cost) << '\n';
    }
    *out = Copy(os.str());
  });
}

adcop_status adcop_report_summary(const adcop_report* report, char** out) {
  return Guard([&] {
    Require(report, "report");
    Require(out, "out");
    const adcop::RunReport& r = report->value;
    std::ostringstream os;
    os << "algorithm: " << r.algorithm << '\n';
    os << "cost: " << (r.assignment.empty() ? "none" : adcop::FormatCost(r.cost));
    if (r.optimal_cost) os << " (optimum " << adcop::FormatCost(*r.optimal_cost) << ')';
    os << '\n';
    if (!r.assignment.empty()) {
      os << "assignment:";
      for (int v : r.assignment) os << ' ' << v;
      os << '\n';
    }
    os << "nclo: " << r.nclo << "  messages: " << r.messages.sent << '\n';
    os << "privacy: loss " << r.avg_privacy_loss << "%  max gain " << r.max_privacy_gain
       << "%\n";
    if (r.cycles_to_converge >= 0) os << "converged at cycle " << r.cycles_to_converge << '\n';
    os << "status: " << r.status << '\n';
    *out = Copy(os.str());
  });
}

const char* adcop_csv_header(void) {
  static const std::string header = adcop::CsvHeader();
  return header.c_str();
}

const char* adcop_algorithm_names(void) {
  static const std::string names = Join(adcop::AlgorithmNames());
  return names.c_str();
}

const char* adcop_preset_names(void) {
  static const std::string names = Join(adcop::PresetNames());
  return names.c_str();
}

adcop_status adcop_experiment_run(const adcop_config* config, adcop_experiment** out) {
  return Guard([&] {
    Require(config, "config");
    Require(out, "out");
    adcop::ExperimentConfig c = config->value;
    c.defaults.oracle = config->oracle;
    auto e = std::make_unique<adcop_experiment>();
    e->value = adcop::RunExperiment(c);
    e->summary = adcop::FormatSummary(e->value.summary);
    for (const auto& s : e->value.summary) e->failures += s.failures;
    *out = e.release();
  });
}

void adcop_experiment_free(adcop_experiment* experiment) { delete experiment; }

const char* adcop_experiment_csv(const adcop_experiment* experiment) {
  return experiment ? experiment->value.csv.c_str() : "";
}

const char* adcop_experiment_summary(const adcop_experiment* experiment) {
  return experiment ? experiment->summary.c_str() : "";
}

int adcop_experiment_failures(const adcop_experiment* experiment) {
  return experiment ? experiment->failures : 0;
}

}  // extern "C"
