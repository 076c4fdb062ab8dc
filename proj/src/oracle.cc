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

#include "lfg/oracle.h"

#include <algorithm>
#include <cmath>
#include <thread>

namespace lfg {
namespace {

void Compositions(int parts, int remaining, std::vector<int>& prefix,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 1) {
    prefix.push_back(remaining);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    Compositions(parts - 1, remaining - v, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

int GridSpec::Denominator() const {
  if (!(step > 0.0 && step <= 1.0)) throw UsageError("grid step must be in (0, 1]");
  return std::max(1, static_cast<int>(std::lround(1.0 / step)));
}

int64_t GridSize(const GridSpec& spec) {
  if (spec.dimension < 1) throw UsageError("grid dimension must be positive");
  const int64_t n = spec.Denominator();
  // C(n + d - 1, d - 1), stopping once past the cap.
  const int64_t k = spec.dimension - 1;
  double count = 1.0;
  for (int64_t i = 1; i <= k; ++i) {
    count = count * static_cast<double>(n + i) / static_cast<double>(i);
    if (count > static_cast<double>(spec.max_points)) return -1;
  }
  return static_cast<int64_t>(std::llround(count));
}

void ForEachGridPoint(const GridSpec& spec,
                      const std::function<void(const LeaderStrategy&)>& visit) {
  if (GridSize(spec) < 0) {
    throw UsageError("grid has more than " + std::to_string(spec.max_points) +
                     " points; raise the step or the cap");
  }
  const int n = spec.Denominator();
  std::vector<int> prefix;
  Compositions(spec.dimension, n, prefix, [&](const std::vector<int>& c) {
    std::vector<double> p(c.size());
    for (size_t k = 0; k < c.size(); ++k) p[k] = static_cast<double>(c[k]) / n;
    visit(LeaderStrategy(std::move(p)));
  });
}

GridEstimate GridSupEstimate(const NormalFormGame& game, const GridSpec& spec,
                             int workers) {
  GridSpec s = spec;
  s.dimension = game.num_leader_actions();
  std::vector<LeaderStrategy> points;
  ForEachGridPoint(s, [&](const LeaderStrategy& x) { points.push_back(x); });

  struct Best {
    std::optional<double> value;
    int64_t index = -1;
  };
  auto scan = [&](int64_t begin, int64_t end) {
    Best best;
    for (int64_t i = begin; i < end; ++i) {
      const auto f = PessimisticUtility(game, points[i]);
      if (f && (!best.value || *f > *best.value)) best = {f, i};
    }
    return best;
  };

  const int64_t total = static_cast<int64_t>(points.size());
  workers = std::clamp<int>(workers, 1, static_cast<int>(std::max<int64_t>(1, total)));
  std::vector<Best> partial(workers);
  if (workers == 1) {
    partial[0] = scan(0, total);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      const int64_t begin = total * w / workers;
      const int64_t end = total * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] { partial[w] = scan(begin, end); });
    }
    for (auto& t : threads) t.join();
  }

  Best best;
  for (const Best& b : partial) {
    if (b.value && (!best.value || *b.value > *best.value)) best = b;
  }
  GridEstimate out;
  out.points = total;
  out.value = best.value;
  if (best.index >= 0) out.argmax = points[best.index];
  return out;
}

std::set<std::vector<int>> RealizedSupports(
    const NormalFormGame& game, const std::vector<LeaderStrategy>& samples) {
  std::set<std::vector<int>> out;
  for (const auto& x : samples) out.insert(EnumeratePureNes(game, x));
  return out;
}

std::set<std::vector<int>> ExhaustiveConfigCheck(const NormalFormGame& game,
                                                 const GridSpec& spec) {
  GridSpec s = spec;
  s.dimension = game.num_leader_actions();
  std::set<std::vector<int>> out;
  ForEachGridPoint(s, [&](const LeaderStrategy& x) {
    out.insert(EnumeratePureNes(game, x));
  });
  return out;
}

}  // namespace lfg
