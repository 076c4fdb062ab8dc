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

#include "lfg/gadgets.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lfg/game_io.h"

namespace lfg {
namespace {

// Fills payoff tensors one full action profile at a time.
class PayoffBuilder {
 public:
  explicit PayoffBuilder(std::vector<int> actions) : actions_(std::move(actions)) {
    size_t total = 1;
    for (int m : actions_) total *= m;
    tensors_.assign(actions_.size(), std::vector<double>(total, 0.0));
  }

  void Set(std::span<const int> profile, std::span<const double> values) {
    size_t index = 0;
    for (size_t p = 0; p < actions_.size(); ++p) index = index * actions_[p] + profile[p];
    for (size_t p = 0; p < values.size(); ++p) tensors_[p][index] = values[p];
  }

  void Set(std::initializer_list<int> profile,
           std::initializer_list<double> values) {
    Set(std::span<const int>(profile.begin(), profile.size()),
        std::span<const double>(values.begin(), values.size()));
  }

  NormalFormGame Build() && {
    return NormalFormGame(std::move(actions_), std::move(tensors_));
  }

 private:
  std::vector<int> actions_;
  std::vector<std::vector<double>> tensors_;
};

std::string StripComment(std::string line, char marker) {
  const auto pos = line.find(marker);
  if (pos != std::string::npos) line.erase(pos);
  return line;
}

}  // namespace

bool UndirectedGraph::HasEdge(int u, int v) const {
  for (const auto& [a, b] : edges) {
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

void ValidateGraph(const UndirectedGraph& graph) {
  if (graph.num_vertices < 1) throw UsageError("graph needs at least one vertex");
  for (const auto& [u, v] : graph.edges) {
    if (u < 0 || v < 0 || u >= graph.num_vertices || v >= graph.num_vertices) {
      throw UsageError("edge endpoint out of range");
    }
    if (u == v) throw UsageError("self-loops are not allowed");
  }
}

UndirectedGraph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  UndirectedGraph graph;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(StripComment(raw, '#'));
    std::string first;
    if (!(line >> first)) continue;
    if (!header) {
      if (first != "vertices" || !(line >> graph.num_vertices)) {
        throw ParseError(line_no, "expected 'vertices <r>'");
      }
      header = true;
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad edge endpoint '" + first + "'");
    }
    if (!(line >> v)) throw ParseError(line_no, "edge needs two endpoints");
    if (u < 1 || v < 1 || u > graph.num_vertices || v > graph.num_vertices || u == v) {
      throw ParseError(line_no, "edge endpoint out of range or self-loop");
    }
    if (!graph.HasEdge(u - 1, v - 1)) graph.edges.emplace_back(u - 1, v - 1);
  }
  if (!header) throw ParseError(line_no, "missing 'vertices' line");
  ValidateGraph(graph);
  return graph;
}

std::string WriteEdgeList(const UndirectedGraph& graph) {
  std::ostringstream out;
  out << "vertices " << graph.num_vertices << "\n";
  for (const auto& [u, v] : graph.edges) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

Cnf3Formula ParseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  Cnf3Formula formula;
  int declared_clauses = -1;
  int line_no = 0;
  std::vector<Literal> pending;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(raw);
    std::string first;
    if (!(line >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (!(line >> kind >> formula.num_variables >> declared_clauses) ||
          kind != "cnf") {
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      }
      continue;
    }
    if (declared_clauses < 0) throw ParseError(line_no, "clause before header");
    std::istringstream tokens(raw);
    long long lit = 0;
    while (tokens >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ParseError(line_no, "clause must have exactly three literals");
        }
        formula.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > formula.num_variables) {
        throw ParseError(line_no, "literal refers to an undeclared variable");
      }
      pending.push_back(Literal{static_cast<int>(var - 1), lit < 0});
    }
    if (!tokens.eof()) throw ParseError(line_no, "bad literal token");
  }
  if (!pending.empty()) throw ParseError(line_no, "unterminated clause");
  if (declared_clauses < 0) throw ParseError(line_no, "missing header");
  if (static_cast<int>(formula.clauses.size()) != declared_clauses) {
    throw ParseError(line_no, "clause count does not match the header");
  }
  return formula;
}

IndsetParameters DefaultIndsetParameters(int r) {
  const double c = 1.0 / ((r + 1.0) * (r + 1.0) + 1.0);
  return IndsetParameters{c / 2.0, c};
}

NormalFormGame MakeIndsetGame(const UndirectedGraph& graph, double b, double c,
                              bool reduction_bound) {
  ValidateGraph(graph);
  const int r = graph.num_vertices;
  if (!(b > 0.0 && b < c)) throw UsageError("need 0 < b < c");
  const double limit = reduction_bound ? 1.0 / ((r + 1.0) * (r + 1.0)) : 1.0 / r;
  if (reduction_bound ? !(c < limit) : !(c <= limit)) {
    throw UsageError("c is outside the admissible range for r = " +
                     std::to_string(r));
  }
  const int chi = r;
  PayoffBuilder builder({r + 1, r + 1, r});
  const double penalty = -1.0 / c - 1.0;
  for (int a3 = 0; a3 < r; ++a3) {
    for (int a1 = 0; a1 <= r; ++a1) {
      for (int a2 = 0; a2 <= r; ++a2) {
        double u1, u2, u3 = 0.0;
        if (a1 == chi && a2 == chi) {
          u1 = c;
          u2 = b;
        } else if (a1 == chi) {
          u1 = c;
          u2 = 0.0;
        } else if (a2 == chi) {
          u1 = 1.0;
          u2 = 0.0;
        } else if (a1 != a2) {
          u1 = u2 = b;
        } else if (a1 == a3) {
          u1 = u2 = 1.0;
        } else {
          u1 = u2 = 0.0;
          u3 = graph.HasEdge(a1, a3) ? penalty : 1.0;
        }
        builder.Set({a1, a2, a3}, {u1, u2, u3});
      }
    }
  }
  return std::move(builder).Build();
}

NormalFormGame MakeIndsetGame(const UndirectedGraph& graph) {
  const auto params = DefaultIndsetParameters(graph.num_vertices);
  return MakeIndsetGame(graph, params.b, params.c);
}

NormalFormGame Make3SatGame(const Cnf3Formula& formula, double eps) {
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  const int r = formula.num_variables;
  const int t = static_cast<int>(formula.clauses.size());
  if (r < 1 || t < 1) throw UsageError("formula needs variables and clauses");
  for (const auto& clause : formula.clauses) {
    for (const auto& l : clause) {
      if (l.variable < 0 || l.variable >= r) {
        throw UsageError("literal variable out of range");
      }
    }
  }
  const int chi = 8 * t;
  const int w = r;
  const double low = 1.0 / (r + 1.0);
  const double high = r / (r + 1.0);
  const double off = 1.0 / (r + 2.0);

  // Literal p of the clause-local assignment behind action a.
  auto literal = [&](int a, int p) {
    const auto& clause = formula.clauses[a / 8];
    const bool negated = ((a % 8) >> (2 - p)) & 1;
    return Literal{clause[p].variable, negated};
  };
  auto threshold = [&](int a, int p) { return literal(a, p).negated ? high : low; };

  PayoffBuilder builder({chi + 1, chi + 1, chi + 1, r + 1});
  for (int a1 = 0; a1 <= chi; ++a1) {
    for (int a2 = 0; a2 <= chi; ++a2) {
      for (int a3 = 0; a3 <= chi; ++a3) {
        for (int a4 = 0; a4 <= r; ++a4) {
          std::array<double, 4> u{0, 0, 0, 0};
          const bool x1 = a1 == chi, x2 = a2 == chi, x3 = a3 == chi;
          if (!x1 && !x2 && !x3) {
            if (a1 == a2 && a2 == a3) {
              bool falsified = true;
              for (int p = 0; p < 3; ++p) {
                const Literal l = literal(a1, p);
                const Literal clause_literal = formula.clauses[a1 / 8][p];
                if (clause_literal.negated == l.negated) falsified = false;
                if (a4 == w) {
                  u[p] = l.negated ? 1.0 : 0.0;
                } else {
                  const bool same = l.variable == a4;
                  u[p] = (same != l.negated) ? 1.0 : 0.0;
                }
              }
              u[3] = falsified ? eps : 1.0;
            } else {
              u = {off, off, off, 0.0};
            }
          } else if (x1 && !x2 && !x3) {
            u = {threshold(a2, 0), 0.0, 0.0, 0.0};
          } else if (!x1 && x2 && !x3) {
            u = {1.0, threshold(a1, 1), 0.0, 0.0};
          } else if (!x1 && !x2 && x3) {
            u = {0.0, 1.0, threshold(a2, 2), 0.0};
          } else if (!x1 && x2 && x3) {
            u = {1.0, 0.0, 1.0, 0.0};
          } else if (x1 && !x2 && x3) {
            u = {1.0, 0.0, 0.0, 0.0};
          } else {  // (chi, chi, a3) for any a3
            u = {0.0, 1.0, 0.0, 0.0};
          }
          builder.Set({a1, a2, a3, a4}, {u[0], u[1], u[2], u[3]});
        }
      }
    }
  }
  return std::move(builder).Build();
}

NormalFormGame MakeNonexistenceGame() {
  PayoffBuilder builder({2, 2, 2});
  // Leader action 1.
  builder.Set({0, 0, 0}, {1, 1, 0});
  builder.Set({0, 1, 0}, {2, 2, 5});
  builder.Set({1, 0, 0}, {0.5, 0.5, 1});
  builder.Set({1, 1, 0}, {1, 1, 0});
  // Leader action 2.
  builder.Set({0, 0, 1}, {0, 0, 0});
  builder.Set({0, 1, 1}, {2, 2, 10});
  builder.Set({1, 0, 1}, {0.5, 0.5, 1});
  builder.Set({1, 1, 1}, {0, 0, 0});
  return std::move(builder).Build();
}

NormalFormGame MakeArbitrarilyWorseGame(double mu) {
  if (!(mu > 1.0)) throw UsageError("mu must exceed 1");
  PayoffBuilder builder({2, 2, 2});
  builder.Set({0, 0, 0}, {1, 1, 0});
  builder.Set({0, 1, 0}, {0.5, 0.5, 0});
  builder.Set({1, 0, 0}, {2, 2, 1});
  builder.Set({1, 1, 0}, {0, 0, 0});
  builder.Set({0, 0, 1}, {0, 0, 0});
  builder.Set({0, 1, 1}, {0.5, 0.5, 4 * mu});
  builder.Set({1, 0, 1}, {2, 2, mu});
  builder.Set({1, 1, 1}, {1, 1, 0});
  return std::move(builder).Build();
}

NormalFormGame MakeTwoSatClauseGame(double eps) {
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  constexpr int kChi = 4;
  constexpr double q = 1.0 / 4, lo = 1.0 / 3, hi = 2.0 / 3;
  // Diagonal entries (u1, u2, u3) per leader action; the third value of the
  // last row is eps.
  const double diagonal[3][4][3] = {
      {{1, 0, 1}, {1, 1, 1}, {0, 0, 1}, {0, 1, eps}},  // v1
      {{0, 1, 1}, {0, 0, 1}, {1, 1, 1}, {1, 0, eps}},  // v2
      {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {0, 1, eps}},  // w
  };
  const double chi_column[4][3] = {{1, lo, 0}, {1, hi, 0}, {1, lo, 0}, {1, hi, 0}};
  const double chi_row[4][3] = {{lo, 0, 0}, {lo, 0, 0}, {hi, 0, 0}, {hi, 0, 0}};
  PayoffBuilder builder({5, 5, 3});
  for (int a3 = 0; a3 < 3; ++a3) {
    for (int a1 = 0; a1 <= kChi; ++a1) {
      for (int a2 = 0; a2 <= kChi; ++a2) {
        const double* u;
        const double off[3] = {q, q, 0};
        const double corner[3] = {0, 1, 0};
        if (a1 == kChi && a2 == kChi) {
          u = corner;
        } else if (a1 == kChi) {
          u = chi_row[a2];
        } else if (a2 == kChi) {
          u = chi_column[a1];
        } else if (a1 == a2) {
          u = diagonal[a3][a1];
        } else {
          u = off;
        }
        builder.Set({a1, a2, a3}, {u[0], u[1], u[2]});
      }
    }
  }
  return std::move(builder).Build();
}

NormalFormGame MakeWorkedExample(WorkedExample which, double parameter) {
  switch (which) {
    case WorkedExample::kNonexistence:
      return MakeNonexistenceGame();
    case WorkedExample::kArbitrarilyWorse:
      return MakeArbitrarilyWorseGame(parameter);
    case WorkedExample::kTwoSat:
      return MakeTwoSatClauseGame(parameter);
  }
  throw UsageError("unknown example");
}

}  // namespace lfg
