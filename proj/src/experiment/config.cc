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

#include "experiment/config.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

#include "common/error.h"

namespace adcop {
namespace {

namespace pt = boost::property_tree;

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T Get(const pt::ptree& tree, const std::string& key) {
  try {
    return tree.get<T>(key);
  } catch (const pt::ptree_error&) {
    Fail(ErrorCode::kConfig, "bad value for '" + key + "'");
  }
}

int IntParam(double value, const std::string& key) {
  if (value != std::floor(value)) Fail(ErrorCode::kConfig, key + " must be an integer");
  return static_cast<int>(value);
}

ParamOverrides ReadOverrides(const pt::ptree& section) {
  ParamOverrides o;
  for (const auto& [key, node] : section) {
    if (key == "cycles") {
      o.cycles = Get<int>(section, key);
    } else if (key == "p") {
      o.p = Get<double>(section, key);
    } else if (key == "coord_c") {
      o.coord_c = Get<double>(section, key);
    } else if (key == "offer_probability") {
      o.offer_probability = Get<double>(section, key);
    } else if (key == "threshold") {
      o.threshold = Get<double>(section, key);
    } else if (key == "policy") {
      o.policy = ParsePolicy(Trim(node.data()));
    } else if (key != "algorithms" && key != "seeds" && key != "seed" && key != "out") {
      Fail(ErrorCode::kConfig, "unknown parameter '" + key + "'");
    }
  }
  return o;
}

}  // namespace

void ParamOverrides::ApplyTo(AlgorithmParams& params) const {
  if (cycles) params.cycles = *cycles;
  if (p) params.p = *p;
  if (coord_c) params.coord_c = *coord_c;
  if (offer_probability) params.offer_probability = *offer_probability;
  if (threshold) params.threshold = *threshold;
  if (policy) params.policy = *policy;
}

AlgorithmParams ExperimentConfig::ParamsFor(const std::string& algorithm,
                                            std::uint64_t seed) const {
  AlgorithmParams params = defaults;
  if (auto it = per_algorithm.find(algorithm); it != per_algorithm.end()) {
    it->second.ApplyTo(params);
  }
  flags.ApplyTo(params);
  params.seed = seed;
  return params;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

void SetGeneratorParam(GeneratorSpec& spec, const std::string& key, double value) {
  if (key == "n") {
    spec.set_n(IntParam(value, key));
  } else if (key == "k") {
    spec.set_k(IntParam(value, key));
  } else if (key == "p1") {
    spec.discsp.p1 = value;
  } else if (key == "p2") {
    spec.discsp.p2 = value;
  } else if (key == "degree") {
    spec.game.mean_degree = value;
  } else if (key == "edge_p") {
    spec.game.edge_probability = value;
    spec.game.mean_degree = -1;
  } else if (key == "z") {
    spec.game.costs.zero_probability = spec.scale_free.costs.zero_probability = value;
  } else if (key == "lo") {
    spec.game.costs.lo = spec.scale_free.costs.lo = IntParam(value, key);
  } else if (key == "hi") {
    spec.game.costs.hi = spec.scale_free.costs.hi = IntParam(value, key);
  } else if (key == "m0") {
    spec.scale_free.m0 = IntParam(value, key);
  } else if (key == "m") {
    spec.scale_free.m = IntParam(value, key);
  } else {
    Fail(ErrorCode::kConfig, "unknown generator parameter '" + key + "'");
  }
}

ExperimentConfig ParseConfig(const std::string& text) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ptree_error& e) {
    Fail(ErrorCode::kConfig, std::string("malformed config: ") + e.what());
  }
  ExperimentConfig config;
  for (const auto& [name, section] : tree) {
    if (name == "instance") {
      if (auto preset = section.get_optional<std::string>("preset")) {
        config.spec = PresetSpec(Trim(*preset));
      }
      for (const auto& [key, node] : section) {
        if (key != "preset") SetGeneratorParam(config.spec, key, Get<double>(section, key));
      }
    } else if (name == "experiment") {
      if (auto algos = section.get_optional<std::string>("algorithms")) {
        config.algorithms = SplitList(*algos);
      }
      if (section.count("seeds")) config.seeds = Get<int>(section, "seeds");
      if (section.count("seed")) config.base_seed = Get<std::uint64_t>(section, "seed");
      if (section.count("out")) config.out = Trim(section.get<std::string>("out"));
      ReadOverrides(section).ApplyTo(config.defaults);
    } else if (name.rfind("algorithm.", 0) == 0) {
      config.per_algorithm[name.substr(10)] = ReadOverrides(section);
    } else {
      Fail(ErrorCode::kConfig, "unknown section '" + name + "'");
    }
  }
  return config;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str());
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.algorithms.empty()) Fail(ErrorCode::kConfig, "algorithm list is empty");
  if (config.seeds < 1) Fail(ErrorCode::kConfig, "instance count must be at least 1");
  for (const auto& a : config.algorithms) {
    if (!IsKnownAlgorithm(a)) Fail(ErrorCode::kConfig, "unknown algorithm '" + a + "'");
  }
  for (const auto& [a, o] : config.per_algorithm) {
    if (!IsKnownAlgorithm(a)) Fail(ErrorCode::kConfig, "unknown algorithm section '" + a + "'");
  }
  ValidateSpec(config.spec);
  for (const auto& a : config.algorithms) {
    const AlgorithmParams p = config.ParamsFor(a, 0);
    if (p.cycles < 0) Fail(ErrorCode::kConfig, "cycles must be non-negative");
    if (p.p > 1) Fail(ErrorCode::kConfig, "p must lie in [0, 1]");
    if (p.threshold > 100) Fail(ErrorCode::kConfig, "threshold must lie in [0, 100]");
    if (p.offer_probability < 0 || p.offer_probability > 1) {
      Fail(ErrorCode::kConfig, "offer_probability must lie in [0, 1]");
    }
  }
}

}  // namespace adcop
