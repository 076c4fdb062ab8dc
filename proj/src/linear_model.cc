// Copyright 2026 The LFG Authors.
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

#include "lfg/linear_model.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lfg/game.h"
#include "lfg/game_io.h"

namespace lfg {

int LinearModel::AddVariable(std::string name, double lower, double upper,
                             bool binary) {
  if (!constraints_.empty()) {
    throw UsageError("variables must be added before constraints");
  }
  if (std::isnan(lower) || std::isnan(upper) || lower > upper) {
    throw UsageError("variable '" + name + "' has inconsistent bounds");
  }
  if (binary && (lower < 0.0 || upper > 1.0)) {
    throw UsageError("binary variable '" + name + "' must lie in [0, 1]");
  }
  variables_.push_back(Variable{std::move(name), lower, upper, binary});
  objective_.push_back(0.0);
  return num_variables() - 1;
}

int LinearModel::AddConstraint(std::vector<double> coefficients,
                               Relation relation, double rhs,
                               std::string name) {
  if (static_cast<int>(coefficients.size()) != num_variables()) {
    throw UsageError("constraint row width does not match variable count");
  }
  constraints_.push_back(
      Constraint{std::move(coefficients), relation, rhs, std::move(name)});
  return num_constraints() - 1;
}

void LinearModel::SetObjective(std::vector<double> coefficients, Sense sense) {
  if (static_cast<int>(coefficients.size()) != num_variables()) {
    throw UsageError("objective row width does not match variable count");
  }
  objective_ = std::move(coefficients);
  sense_ = sense;
}

int LinearModel::num_binaries() const {
  return static_cast<int>(std::count_if(
      variables_.begin(), variables_.end(),
      [](const Variable& v) { return v.binary; }));
}

double LinearModel::ObjectiveValue(std::span<const double> point) const {
  double value = 0.0;
  for (int j = 0; j < num_variables(); ++j) value += objective_[j] * point[j];
  return value;
}

double LinearModel::MaxViolation(std::span<const double> point) const {
  double worst = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    worst = std::max(worst, variables_[j].lower - point[j]);
    worst = std::max(worst, point[j] - variables_[j].upper);
  }
  for (const auto& c : constraints_) {
    double lhs = 0.0;
    for (int j = 0; j < num_variables(); ++j) lhs += c.coefficients[j] * point[j];
    if (c.relation != Relation::kGreaterEqual) worst = std::max(worst, lhs - c.rhs);
    if (c.relation != Relation::kLessEqual) worst = std::max(worst, c.rhs - lhs);
  }
  return worst;
}

void LinearModel::Validate() const {
  if (static_cast<int>(objective_.size()) != num_variables()) {
    throw UsageError("objective row width does not match variable count");
  }
  for (const auto& v : variables_) {
    if (v.lower > v.upper) throw UsageError("variable '" + v.name + "' has lo > hi");
    if (v.binary && (v.lower < 0.0 || v.upper > 1.0)) {
      throw UsageError("binary variable '" + v.name + "' must lie in [0, 1]");
    }
  }
  for (const auto& c : constraints_) {
    if (static_cast<int>(c.coefficients.size()) != num_variables()) {
      throw UsageError("constraint row width does not match variable count");
    }
    for (double a : c.coefficients) {
      if (!std::isfinite(a)) throw UsageError("non-finite coefficient");
    }
    if (!std::isfinite(c.rhs)) throw UsageError("non-finite right-hand side");
  }
}

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kLimitReached: return "limit_reached";
  }
  return "unknown";
}

namespace {

std::string LpName(const std::string& name, const char* prefix, int index) {
  if (name.empty()) return std::string(prefix) + std::to_string(index);
  std::string out;
  for (char c : name) {
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')
               ? c : '_';
  }
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "v" + out;
  return out;
}

void AppendTerms(std::ostringstream& out, std::span<const double> row,
                 const std::vector<std::string>& names) {
  bool first = true;
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0.0) continue;
    out << (row[j] < 0 ? " - " : (first ? " " : " + "))
        << FormatDouble(std::abs(row[j])) << " " << names[j];
    first = false;
  }
  if (first) out << " 0 " << (names.empty() ? "dummy" : names[0]);
}

}  // namespace

std::string WriteLpFormat(const LinearModel& model) {
  std::vector<std::string> names;
  for (int j = 0; j < model.num_variables(); ++j) {
    names.push_back(LpName(model.variables()[j].name, "x", j));
  }
  std::ostringstream out;
  out << (model.sense() == Sense::kMaximize ? "Maximize\n" : "Minimize\n");
  out << " obj:";
  AppendTerms(out, model.objective(), names);
  out << "\nSubject To\n";
  for (int i = 0; i < model.num_constraints(); ++i) {
    const auto& c = model.constraints()[i];
    out << " " << LpName(c.name, "c", i) << ":";
    AppendTerms(out, c.coefficients, names);
    out << (c.relation == Relation::kLessEqual
                ? " <= "
                : (c.relation == Relation::kEqual ? " = " : " >= "))
        << FormatDouble(c.rhs) << "\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < model.num_variables(); ++j) {
    const auto& v = model.variables()[j];
    if (v.binary) continue;
    if (std::isinf(v.lower) && std::isinf(v.upper)) {
      out << " " << names[j] << " free\n";
    } else {
      out << " ";
      out << (std::isinf(v.lower) ? "-inf" : FormatDouble(v.lower));
      out << " <= " << names[j] << " <= ";
      out << (std::isinf(v.upper) ? "+inf" : FormatDouble(v.upper)) << "\n";
    }
  }
  bool any_binary = false;
  for (int j = 0; j < model.num_variables(); ++j) {
    if (!model.variables()[j].binary) continue;
    if (!any_binary) out << "Binaries\n";
    any_binary = true;
    out << " " << names[j] << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace lfg
