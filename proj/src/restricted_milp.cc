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

#include "lfg/restricted_milp.h"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lfg/game_io.h"
#include "lfg/oracle.h"

namespace lfg {
namespace {

void RequireThreePlayers(const NormalFormGame& game) {
  if (game.num_players() != 3) {
    throw UsageError("the single-level reformulation needs exactly 3 players");
  }
}

std::string Suffix(std::initializer_list<int> parts) {
  std::string out;
  for (int v : parts) out += "_" + std::to_string(v);
  return out;
}

// U_p(a)_k - U_p(a')_k for the deviation of `follower` to `action`.
std::vector<double> Regret(const NormalFormGame& game, int profile, int follower,
                           int action) {
  const auto own = game.Slice(follower, profile);
  const auto dev = game.Slice(follower, game.Deviate(profile, follower, action));
  std::vector<double> d(own.size());
  for (size_t k = 0; k < own.size(); ++k) d[k] = own[k] - dev[k];
  return d;
}

double Dot(std::span<const double> a, std::span<const double> x) {
  double out = 0.0;
  for (size_t k = 0; k < a.size(); ++k) out += a[k] * x[k];
  return out;
}

// For a fixed x the binaries have a closed form: p is on exactly for the
// deviations that gain, and y picks the best NE whose value no profile's
// dual bound undercuts. Returns the full column vector, or nullopt.
std::optional<std::vector<double>> CompleteAt(const NormalFormGame& game,
                                              const RestrictedModel& built,
                                              double big_m,
                                              std::span<const double> x) {
  const int m = game.num_leader_actions();
  const int profiles = game.num_follower_profiles();
  const int mf = std::max(game.num_actions(0), game.num_actions(1));

  std::vector<double> cap(profiles);   // dual bound on the leader's value
  std::vector<double> value(profiles);
  std::vector<bool> nash(profiles, true);
  std::vector<double> point(built.model.num_variables(), 0.0);
  for (int a = 0; a < profiles; ++a) {
    value[a] = Dot(game.Slice(game.leader(), a), x);
    cap[a] = value[a];
    for (int f = 0; f < 2; ++f) {
      for (int b = 0; b < game.num_actions(f); ++b) {
        const int slot = (a * 2 + f) * mf + b;
        if (built.p[slot] < 0) continue;
        const double regret = Dot(Regret(game, a, f, b), x);
        if (regret < 0.0) {
          nash[a] = false;
          cap[a] -= big_m * regret;
          point[built.p[slot]] = 1.0;
          point[built.w[slot]] = regret;
        }
      }
    }
  }
  const double floor = *std::min_element(cap.begin(), cap.end());
  int chosen = -1;
  for (int a = 0; a < profiles; ++a) {
    if (nash[a] && value[a] <= floor && (chosen < 0 || value[a] > value[chosen])) {
      chosen = a;
    }
  }
  if (chosen < 0) return std::nullopt;
  for (int k = 0; k < m; ++k) {
    point[built.x + k] = x[k];
    point[built.z[chosen * m + k]] = x[k];
  }
  point[built.y[chosen]] = 1.0;
  return point;
}

constexpr int64_t kSeedGridPoints = 3000;

}  // namespace

RestrictedModel BuildRestrictedMilp(const NormalFormGame& game, double big_m) {
  RequireThreePlayers(game);
  if (!(big_m > 0.0)) throw UsageError("M must be positive");
  const int m = game.num_leader_actions();
  const int profiles = game.num_follower_profiles();
  const int mf = std::max(game.num_actions(0), game.num_actions(1));

  RestrictedModel out;
  LinearModel& model = out.model;
  out.x = model.num_variables();
  for (int k = 0; k < m; ++k) model.AddVariable("x" + Suffix({k}), 0, 1);
  for (int a = 0; a < profiles; ++a) {
    out.y.push_back(model.AddBinary("y" + Suffix({a})));
  }
  for (int a = 0; a < profiles; ++a) {
    for (int k = 0; k < m; ++k) {
      out.z.push_back(model.AddVariable("z" + Suffix({a, k}), 0, 1));
    }
  }
  out.p.assign(profiles * 2 * mf, -1);
  out.w.assign(profiles * 2 * mf, -1);
  for (int a = 0; a < profiles; ++a) {
    for (int f = 0; f < 2; ++f) {
      for (int b = 0; b < game.num_actions(f); ++b) {
        if (b == game.ActionOf(a, f)) continue;
        const int slot = (a * 2 + f) * mf + b;
        out.p[slot] = model.AddBinary("p" + Suffix({f + 1, a, b}));
        out.w[slot] =
            model.AddVariable("w" + Suffix({f + 1, a, b}), -kInfinity, kInfinity);
      }
    }
  }

  std::vector<double> objective = model.Row();
  for (int a = 0; a < profiles; ++a) {
    const auto u = game.Slice(game.leader(), a);
    for (int k = 0; k < m; ++k) objective[out.z[a * m + k]] = u[k];
  }
  model.SetObjective(objective, Sense::kMaximize);

  auto row = model.Row();
  for (int a = 0; a < profiles; ++a) row[out.y[a]] = 1;
  model.AddConstraint(row, Relation::kEqual, 1, "select");
  row = model.Row();
  for (int k = 0; k < m; ++k) row[out.x + k] = 1;
  model.AddConstraint(row, Relation::kEqual, 1, "simplex");

  // Followers' best-response rows on z.
  for (int a = 0; a < profiles; ++a) {
    for (int f = 0; f < 2; ++f) {
      for (int b = 0; b < game.num_actions(f); ++b) {
        if (b == game.ActionOf(a, f)) continue;
        const auto d = Regret(game, a, f, b);
        row = model.Row();
        for (int k = 0; k < m; ++k) row[out.z[a * m + k]] = d[k];
        model.AddConstraint(row, Relation::kGreaterEqual, 0,
                            "nash" + Suffix({f + 1, a, b}));
      }
    }
  }

  // Leader value against every profile, with duals M p. The dual term
  // M p (d . x) only needs a lower bound on w = p (d . x), since the value
  // row is relaxed as w decreases.
  for (int a = 0; a < profiles; ++a) {
    row = objective;
    const auto u = game.Slice(game.leader(), a);
    for (int k = 0; k < m; ++k) row[out.x + k] -= u[k];
    for (int f = 0; f < 2; ++f) {
      for (int b = 0; b < game.num_actions(f); ++b) {
        const int slot = (a * 2 + f) * mf + b;
        if (out.p[slot] < 0) continue;
        row[out.w[slot]] = big_m;
        const auto d = Regret(game, a, f, b);
        const double lo = *std::min_element(d.begin(), d.end());
        const double hi = *std::max_element(d.begin(), d.end());
        const std::string tag = Suffix({f + 1, a, b});
        // w >= d . x - hi (1 - p)
        auto r = model.Row();
        r[out.w[slot]] = 1;
        for (int k = 0; k < m; ++k) r[out.x + k] = -d[k];
        r[out.p[slot]] = -hi;
        model.AddConstraint(r, Relation::kGreaterEqual, -hi, "w_on" + tag);
        // w >= lo p
        r = model.Row();
        r[out.w[slot]] = 1;
        r[out.p[slot]] = -lo;
        model.AddConstraint(r, Relation::kGreaterEqual, 0, "w_lo" + tag);
      }
    }
    model.AddConstraint(row, Relation::kLessEqual, 0, "value" + Suffix({a}));
  }

  // z_a = y_a x with y one-hot: z splits x across profiles and each z_a
  // carries the mass of y_a.
  for (int a = 0; a < profiles; ++a) {
    auto r = model.Row();
    for (int k = 0; k < m; ++k) r[out.z[a * m + k]] = 1;
    r[out.y[a]] = -1;
    model.AddConstraint(r, Relation::kEqual, 0, "mass" + Suffix({a}));
  }
  for (int k = 0; k < m; ++k) {
    auto r = model.Row();
    r[out.x + k] = 1;
    for (int a = 0; a < profiles; ++a) r[out.z[a * m + k]] = -1;
    model.AddConstraint(r, Relation::kEqual, 0, "split" + Suffix({k}));
  }
  return out;
}

RestrictedResult SolveRestrictedMilp(const NormalFormGame& game, double big_m,
                                     const MilpOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const RestrictedModel built = BuildRestrictedMilp(game, big_m);
  const int m = game.num_leader_actions();
  auto objective = [&](const std::optional<std::vector<double>>& point) {
    return point ? built.model.ObjectiveValue(*point) : -kInfinity;
  };
  MilpOptions tuned = options;
  bool first = true;
  if (!tuned.heuristic) {
    tuned.heuristic = [&](std::span<const double> lp) {
      std::vector<double> x(m);
      double total = 0.0;
      for (int k = 0; k < m; ++k) total += x[k] = std::max(0.0, lp[built.x + k]);
      std::optional<std::vector<double>> best;
      if (total > 0.0) {
        for (double& v : x) v /= total;
        best = CompleteAt(game, built, big_m, x);
      }
      if (first) {
        // Seed the search with the best completion over a coarse lattice.
        first = false;
        GridSpec spec{1.0, m};
        for (int d = 2; d <= 40; ++d) {
          const GridSpec finer{1.0 / d, m};
          if (GridSize(finer) < 0 || GridSize(finer) > kSeedGridPoints) break;
          spec = finer;
        }
        ForEachGridPoint(spec, [&](const LeaderStrategy& point) {
          auto candidate = CompleteAt(game, built, big_m, point.probabilities());
          if (objective(candidate) > objective(best)) best = std::move(candidate);
        });
      }
      return best;
    };
  }
  const LpSolution sol = SolveMilp(built.model, tuned);
  RestrictedResult result;
  result.status = sol.status;
  result.nodes = sol.nodes;
  if (sol.status == SolveStatus::kOptimal ||
      (sol.status == SolveStatus::kLimitReached && sol.has_incumbent)) {
    result.value = sol.objective;
    result.strategy = LeaderStrategy::FromSolverOutput(
        std::span<const double>(sol.values).subspan(built.x, m), 1e-6);
    // Report the products exactly: z = y x and w = p (d . x). Lowering w to
    // its envelope only relaxes the value rows.
    std::vector<double>& v = result.values = sol.values;
    const auto& x = result.strategy->probabilities();
    const int mf = std::max(game.num_actions(0), game.num_actions(1));
    for (int k = 0; k < m; ++k) v[built.x + k] = x[k];
    for (int a = 0; a < game.num_follower_profiles(); ++a) {
      v[built.y[a]] = std::round(v[built.y[a]]);
      if (v[built.y[a]] == 1.0) result.selected_profile = a;
      for (int k = 0; k < m; ++k) v[built.z[a * m + k]] = v[built.y[a]] * x[k];
      for (int f = 0; f < 2; ++f) {
        for (int b = 0; b < game.num_actions(f); ++b) {
          const int slot = (a * 2 + f) * mf + b;
          if (built.p[slot] < 0) continue;
          v[built.p[slot]] = std::round(v[built.p[slot]]);
          v[built.w[slot]] = v[built.p[slot]] * Dot(Regret(game, a, f, b), x);
        }
      }
    }
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

int QcqpModel::FindVariable(std::string_view name) const {
  for (size_t j = 0; j < variables.size(); ++j) {
    if (variables[j] == name) return static_cast<int>(j);
  }
  return -1;
}

QcqpModel BuildQcqp(const NormalFormGame& game) {
  RequireThreePlayers(game);
  const int m = game.num_leader_actions();
  const int profiles = game.num_follower_profiles();
  const int m1 = game.num_actions(0);
  const int m2 = game.num_actions(1);

  QcqpModel qp;
  auto add = [&](std::string name) {
    qp.variables.push_back(std::move(name));
    return static_cast<int>(qp.variables.size()) - 1;
  };
  auto label = [&](int a) {
    return Suffix({game.ActionOf(a, 0) + 1, game.ActionOf(a, 1) + 1});
  };
  std::vector<int> y(profiles), x(m);
  std::vector<std::vector<int>> beta1(profiles), beta2(profiles);
  for (int a = 0; a < profiles; ++a) y[a] = add("y" + label(a));
  for (int k = 0; k < m; ++k) x[k] = add("x" + Suffix({k + 1}));
  for (int a = 0; a < profiles; ++a) {
    for (int b = 0; b < m1; ++b) {
      beta1[a].push_back(add("beta1" + label(a) + Suffix({b + 1})));
    }
  }
  for (int a = 0; a < profiles; ++a) {
    for (int b = 0; b < m2; ++b) {
      beta2[a].push_back(add("beta2" + label(a) + Suffix({b + 1})));
    }
  }

  std::vector<QuadraticTerm> value;
  for (int a = 0; a < profiles; ++a) {
    const auto u = game.Slice(game.leader(), a);
    for (int k = 0; k < m; ++k) {
      if (u[k] != 0.0) value.push_back({u[k], y[a], x[k]});
    }
  }
  qp.sense = Sense::kMaximize;
  qp.objective_quadratic = value;

  QcqpRow select{"select", {}, {}, Relation::kEqual, 1.0};
  for (int a = 0; a < profiles; ++a) select.linear.push_back({1.0, y[a]});
  qp.rows.push_back(select);

  for (int f = 0; f < 2; ++f) {
    for (int a = 0; a < profiles; ++a) {
      for (int b = 0; b < game.num_actions(f); ++b) {
        if (b == game.ActionOf(a, f)) continue;
        const auto d = Regret(game, a, f, b);
        QcqpRow r{"dev" + std::to_string(f + 1) + label(a) + Suffix({b + 1}),
                  {}, {}, Relation::kGreaterEqual, 0.0};
        for (int k = 0; k < m; ++k) {
          if (d[k] != 0.0) r.quadratic.push_back({d[k], y[a], x[k]});
        }
        qp.rows.push_back(r);
      }
    }
  }

  for (int a = 0; a < profiles; ++a) {
    QcqpRow r{"value" + label(a), {}, value, Relation::kLessEqual, 0.0};
    const auto u = game.Slice(game.leader(), a);
    for (int k = 0; k < m; ++k) {
      if (u[k] != 0.0) r.linear.push_back({-u[k], x[k]});
    }
    for (int f = 0; f < 2; ++f) {
      const auto& beta = f == 0 ? beta1[a] : beta2[a];
      for (int b = 0; b < game.num_actions(f); ++b) {
        if (b == game.ActionOf(a, f)) continue;
        const auto d = Regret(game, a, f, b);
        for (int k = 0; k < m; ++k) {
          if (d[k] != 0.0) r.quadratic.push_back({d[k], beta[b], x[k]});
        }
      }
    }
    qp.rows.push_back(r);
  }

  QcqpRow simplex{"simplex", {}, {}, Relation::kEqual, 1.0};
  for (int k = 0; k < m; ++k) simplex.linear.push_back({1.0, x[k]});
  qp.rows.push_back(simplex);
  return qp;
}

namespace {

constexpr int kTermsPerLine = 6;

class TermWriter {
 public:
  TermWriter(std::ostringstream& out, const QcqpModel& qp)
      : out_(out), qp_(qp) {}

  void Linear(const std::vector<LinearTerm>& terms) {
    for (const auto& t : terms) {
      Sign(t.coefficient);
      out_ << " " << qp_.variables[t.variable];
    }
  }
  void Quadratic(const std::vector<QuadraticTerm>& terms, double scale) {
    if (terms.empty()) return;
    Break();
    out_ << " [";
    for (const auto& t : terms) {
      Sign(scale * t.coefficient);
      out_ << " " << qp_.variables[t.first] << " * "
           << qp_.variables[t.second];
    }
    out_ << " ]";
  }

 private:
  void Sign(double c) {
    Break();
    out_ << (std::signbit(c) ? " - " : " + ") << FormatDouble(std::abs(c));
    ++count_;
  }
  void Break() {
    if (count_ >= kTermsPerLine) {
      out_ << "\n   ";
      count_ = 0;
    }
  }

  std::ostringstream& out_;
  const QcqpModel& qp_;
  int count_ = 0;
};

const char* RelationToken(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "=";
}

}  // namespace

std::string WriteQcqp(const QcqpModel& qp) {
  std::ostringstream out;
  out << "\\ single-level pessimistic reformulation, all variables >= 0\n";
  out << (qp.sense == Sense::kMaximize ? "Maximize\n" : "Minimize\n");
  out << " obj:";
  {
    TermWriter w(out, qp);
    w.Linear(qp.objective_linear);
    // LP format halves the bracketed objective part.
    w.Quadratic(qp.objective_quadratic, 2.0);
    if (!qp.objective_quadratic.empty()) out << " / 2";
  }
  out << "\nSubject To\n";
  for (const auto& r : qp.rows) {
    out << " " << r.name << ":";
    TermWriter w(out, qp);
    w.Linear(r.linear);
    w.Quadratic(r.quadratic, 1.0);
    out << " " << RelationToken(r.relation) << " " << FormatDouble(r.rhs)
        << "\n";
  }
  out << "Bounds\n";
  for (const auto& v : qp.variables) out << " " << v << " >= 0\n";
  out << "End\n";
  return out.str();
}

namespace {

struct Token {
  std::string text;
  int line = 0;
};

class QcqpParser {
 public:
  explicit QcqpParser(std::string_view text) {
    int line = 1;
    std::string current;
    bool comment = false;
    auto flush = [&] {
      if (!current.empty()) tokens_.push_back({current, line});
      current.clear();
    };
    for (char c : text) {
      if (c == '\n') {
        flush();
        comment = false;
        ++line;
      } else if (comment) {
        continue;
      } else if (c == '\\') {
        flush();
        comment = true;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        current += c;
      }
    }
    flush();
  }

  QcqpModel Parse() {
    QcqpModel qp;
    // Variables are declared in the Bounds section; read it first.
    size_t bounds = Find("Bounds");
    for (size_t i = bounds + 1; i < tokens_.size() && tokens_[i].text != "End";
         i += 3) {
      if (i + 2 >= tokens_.size() || tokens_[i + 1].text != ">=" ||
          tokens_[i + 2].text != "0") {
        Fail(i, "expected 'name >= 0' in Bounds");
      }
      qp.variables.push_back(tokens_[i].text);
    }
    qp_ = &qp;

    pos_ = 0;
    const std::string& sense = Next().text;
    if (sense == "Maximize") {
      qp.sense = Sense::kMaximize;
    } else if (sense == "Minimize") {
      qp.sense = Sense::kMinimize;
    } else {
      Fail(pos_ - 1, "expected Maximize or Minimize");
    }
    Expect("obj:");
    ReadTerms(qp.objective_linear, qp.objective_quadratic, /*objective=*/true);
    Expect("Subject");
    Expect("To");
    while (Peek().text != "Bounds") {
      QcqpRow row;
      std::string name = Next().text;
      if (name.size() < 2 || name.back() != ':') Fail(pos_ - 1, "expected row name");
      row.name = name.substr(0, name.size() - 1);
      ReadTerms(row.linear, row.quadratic, /*objective=*/false);
      const std::string rel = Next().text;
      if (rel == "<=") {
        row.relation = Relation::kLessEqual;
      } else if (rel == ">=") {
        row.relation = Relation::kGreaterEqual;
      } else if (rel == "=") {
        row.relation = Relation::kEqual;
      } else {
        Fail(pos_ - 1, "expected a relation");
      }
      row.rhs = Number(Next().text, pos_ - 1);
      qp.rows.push_back(std::move(row));
    }
    return qp;
  }

 private:
  void ReadTerms(std::vector<LinearTerm>& linear,
                 std::vector<QuadraticTerm>& quadratic, bool objective) {
    while (true) {
      const std::string& t = Peek().text;
      if (t == "+" || t == "-") {
        Next();
        const double c = (t == "-" ? -1.0 : 1.0) * Number(Next().text, pos_ - 1);
        linear.push_back({c, Variable(Next().text, pos_ - 1)});
      } else if (t == "[") {
        Next();
        while (Peek().text != "]") {
          const std::string sign = Next().text;
          if (sign != "+" && sign != "-") Fail(pos_ - 1, "expected a sign");
          double c = (sign == "-" ? -1.0 : 1.0) * Number(Next().text, pos_ - 1);
          const int first = Variable(Next().text, pos_ - 1);
          Expect("*");
          const int second = Variable(Next().text, pos_ - 1);
          quadratic.push_back({c, first, second});
        }
        Next();
        if (objective) {
          Expect("/");
          Expect("2");
          for (auto& q : quadratic) q.coefficient /= 2.0;
        }
      } else {
        return;
      }
    }
  }

  size_t Find(const std::string& word) const {
    for (size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].text == word) return i;
    }
    throw ParseError(0, "missing section " + word);
  }
  const Token& Peek() const {
    if (pos_ >= tokens_.size()) throw ParseError(0, "unexpected end of input");
    return tokens_[pos_];
  }
  const Token& Next() {
    const Token& t = Peek();
    ++pos_;
    return t;
  }
  void Expect(const std::string& word) {
    if (Next().text != word) Fail(pos_ - 1, "expected '" + word + "'");
  }
  double Number(const std::string& s, size_t at) const {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      Fail(at, "bad number '" + s + "'");
    }
    if (used != s.size()) Fail(at, "bad number '" + s + "'");
    return v;
  }
  int Variable(const std::string& name, size_t at) const {
    const int j = qp_->FindVariable(name);
    if (j < 0) Fail(at, "undeclared variable '" + name + "'");
    return j;
  }
  [[noreturn]] void Fail(size_t at, const std::string& message) const {
    throw ParseError(at < tokens_.size() ? tokens_[at].line : 0, message);
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  const QcqpModel* qp_ = nullptr;
};

}  // namespace

QcqpModel ParseQcqp(std::string_view text) { return QcqpParser(text).Parse(); }

void ExportQcqp(const NormalFormGame& game, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << WriteQcqp(BuildQcqp(game));
  if (!file) throw std::runtime_error("failed writing " + path);
}

}  // namespace lfg
