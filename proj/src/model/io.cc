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

#include "model/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "common/error.h"

namespace adcop {
namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-empty, comment-stripped line split into tokens; false at EOF.
  bool Next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && IsSpace(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !IsSpace(line[j])) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void Error(const std::string& what) const {
    Fail(ErrorCode::kParse, "line " + std::to_string(line_no_) + ": " + what);
  }

  long long Int(std::string_view token) const {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      Error("expected an integer, got '" + std::string(token) + "'");
    }
    return value;
  }

 private:
  static bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

CostTable ReadMatrix(LineReader& reader, int rows, int cols) {
  CostTable table(rows, cols);
  std::vector<std::string_view> tokens;
  for (int r = 0; r < rows; ++r) {
    if (!reader.Next(tokens)) reader.Error("unexpected end of input inside a matrix");
    if (static_cast<int>(tokens.size()) != cols) {
      reader.Error("matrix row has " + std::to_string(tokens.size()) +
                   " entries, expected " + std::to_string(cols));
    }
    for (int c = 0; c < cols; ++c) {
      long long x = reader.Int(tokens[c]);
      if (x < 0) reader.Error("negative cost");
      table(r, c) = x;
    }
  }
  return table;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tokens;
  if (!reader.Next(tokens)) reader.Error("empty instance");
  if (tokens.size() != 3 || (tokens[0] != "adcop" && tokens[0] != "dcop")) {
    reader.Error("expected header 'adcop <n> <k>' or 'dcop <n> <k>'");
  }
  const bool symmetric = tokens[0] == "dcop";
  const long long n = reader.Int(tokens[1]);
  if (n < 0) reader.Error("negative agent count");
  reader.Int(tokens[2]);  // nominal domain size; per-variable sizes rule

  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::vector<Cost> alphabet;
  while (reader.Next(tokens)) {
    if (tokens[0] == "alphabet") {
      for (std::size_t i = 1; i < tokens.size(); ++i) alphabet.push_back(reader.Int(tokens[i]));
    } else if (tokens[0] == "var") {
      if (tokens.size() != 4) reader.Error("expected 'var <id> <owner> <domain-size>'");
      long long id = reader.Int(tokens[1]);
      if (id != static_cast<long long>(variables.size()) + 1) {
        reader.Error("variable ids must be consecutive from 1");
      }
      long long owner = reader.Int(tokens[2]);
      long long size = reader.Int(tokens[3]);
      if (owner < 1 || owner > n) reader.Error("variable owner out of range");
      if (size < 1) reader.Error("domain size must be positive");
      variables.push_back(Variable{static_cast<int>(owner - 1), static_cast<int>(size)});
    } else if (tokens[0] == "con") {
      if (tokens.size() != 3) reader.Error("expected 'con <i> <j>'");
      long long i = reader.Int(tokens[1]), j = reader.Int(tokens[2]);
      const long long m = static_cast<long long>(variables.size());
      if (i < 1 || i > m || j < 1 || j > m) reader.Error("constraint references an undeclared variable");
      Constraint c;
      c.scope = {static_cast<int>(i - 1), static_cast<int>(j - 1)};
      const int rows = variables[i - 1].domain_size, cols = variables[j - 1].domain_size;
      c.sides.push_back(ReadMatrix(reader, rows, cols));
      if (!symmetric) c.sides.push_back(ReadMatrix(reader, rows, cols));
      constraints.push_back(std::move(c));
    } else {
      reader.Error("unknown directive '" + std::string(tokens[0]) + "'");
    }
  }
  try {
    return Instance(symmetric ? Instance::Kind::kSymmetric : Instance::Kind::kAsymmetric,
                    static_cast<int>(n), std::move(variables), std::move(constraints),
                    std::move(alphabet));
  } catch (const adcop::Error& e) {
    Fail(ErrorCode::kParse, std::string("invalid instance: ") + e.what());
  }
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string FormatInstance(const Instance& instance) {
  std::ostringstream out;
  out << (instance.symmetric() ? "dcop " : "adcop ") << instance.num_agents() << ' '
      << instance.max_domain_size() << '\n';
  out << "alphabet";
  for (Cost c : instance.cost_alphabet()) out << ' ' << c;
  out << '\n';
  for (int v = 0; v < instance.num_variables(); ++v) {
    out << "var " << v + 1 << ' ' << instance.variable(v).owner + 1 << ' '
        << instance.domain_size(v) << '\n';
  }
  for (const auto& c : instance.constraints()) {
    if (!c.binary()) Fail(ErrorCode::kInvalidArgument, "only binary constraints can be written");
    out << "con " << c.scope[0] + 1 << ' ' << c.scope[1] + 1 << '\n';
    for (const auto& side : c.sides) {
      for (int r = 0; r < side.rows(); ++r) {
        for (int col = 0; col < side.cols(); ++col) {
          if (col) out << ' ';
          out << side(r, col);
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

void WriteInstanceFile(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << FormatInstance(instance);
  if (!out) Fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace adcop
