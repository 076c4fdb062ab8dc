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

#include "lfg/game_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lfg {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format number");
  return std::string(buffer, end);
}

std::string WriteGame(const NormalFormGame& game) {
  std::string out = "lfg-game 1\n";
  out += "n " + std::to_string(game.num_players()) + "\n";
  out += "actions";
  for (int m : game.actions()) out += " " + std::to_string(m);
  out += "\nindexing row-major leader-fastest\n";
  const int m = game.num_leader_actions();
  for (int p = 0; p < game.num_players(); ++p) {
    out += "payoffs " + std::to_string(p) + "\n";
    const auto& tensor = game.payoffs(p);
    for (size_t i = 0; i < tensor.size(); ++i) {
      out += FormatDouble(tensor[i]);
      out += ((i + 1) % m == 0) ? '\n' : ' ';
    }
  }
  return out;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream in(raw);
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

long ParseInt(const std::string& token, int line, const std::string& field) {
  long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "field '" + field + "': expected an integer, got '" +
                               token + "'");
  }
  return value;
}

double ParseDouble(const std::string& token, int line,
                   const std::string& field) {
  double value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "field '" + field + "': expected a number, got '" +
                               token + "'");
  }
  return value;
}

const Line& Expect(const std::vector<Line>& lines, size_t index,
                   const std::string& keyword, int last_line) {
  if (index >= lines.size()) {
    throw ParseError(last_line, "missing field '" + keyword + "'");
  }
  const Line& line = lines[index];
  if (line.tokens[0] != keyword) {
    throw ParseError(line.number, "expected field '" + keyword + "', got '" +
                                      line.tokens[0] + "'");
  }
  return line;
}

}  // namespace

NormalFormGame ReadGame(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty game document");
  const int last = lines.back().number;
  size_t at = 0;
  const Line& header = Expect(lines, at++, "lfg-game", last);
  if (header.tokens.size() != 2 || header.tokens[1] != "1") {
    throw ParseError(header.number, "unsupported format version");
  }
  const Line& n_line = Expect(lines, at++, "n", last);
  if (n_line.tokens.size() != 2) throw ParseError(n_line.number, "field 'n' takes one value");
  const long n = ParseInt(n_line.tokens[1], n_line.number, "n");
  if (n < 2 || n > 16) throw ParseError(n_line.number, "field 'n' must be in [2, 16]");

  const Line& a_line = Expect(lines, at++, "actions", last);
  if (static_cast<long>(a_line.tokens.size()) != n + 1) {
    throw ParseError(a_line.number, "field 'actions' needs exactly n counts");
  }
  std::vector<int> actions;
  long long total = 1;
  for (long p = 0; p < n; ++p) {
    const long m = ParseInt(a_line.tokens[p + 1], a_line.number, "actions");
    if (m < 1 || m > 100000) throw ParseError(a_line.number, "field 'actions': count out of range");
    actions.push_back(static_cast<int>(m));
    total *= m;
    if (total > (1LL << 28)) throw ParseError(a_line.number, "game is too large");
  }
  if (at < lines.size() && lines[at].tokens[0] == "indexing") {
    const Line& idx = lines[at++];
    if (idx.tokens.size() != 3 || idx.tokens[1] != "row-major" ||
        idx.tokens[2] != "leader-fastest") {
      throw ParseError(idx.number, "field 'indexing': unsupported order");
    }
  }

  std::vector<std::vector<double>> payoffs(n);
  for (long p = 0; p < n; ++p) {
    const Line& head = Expect(lines, at++, "payoffs", last);
    if (head.tokens.size() != 2 ||
        ParseInt(head.tokens[1], head.number, "payoffs") != p) {
      throw ParseError(head.number, "expected 'payoffs " + std::to_string(p) + "'");
    }
    auto& tensor = payoffs[p];
    tensor.reserve(total);
    while (static_cast<long long>(tensor.size()) < total) {
      if (at >= lines.size()) {
        throw ParseError(last, "payoffs " + std::to_string(p) + ": expected " +
                                   std::to_string(total) + " values, got " +
                                   std::to_string(tensor.size()));
      }
      const Line& row = lines[at];
      if (row.tokens[0] == "payoffs") {
        throw ParseError(row.number, "payoffs " + std::to_string(p) +
                                         ": too few values");
      }
      ++at;
      for (const auto& tok : row.tokens) {
        if (static_cast<long long>(tensor.size()) == total) {
          throw ParseError(row.number, "payoffs " + std::to_string(p) +
                                           ": too many values");
        }
        tensor.push_back(ParseDouble(tok, row.number, "payoffs"));
      }
    }
  }
  if (at != lines.size()) {
    throw ParseError(lines[at].number, "unexpected trailing content '" +
                                           lines[at].tokens[0] + "'");
  }
  try {
    return NormalFormGame(std::move(actions), std::move(payoffs));
  } catch (const UsageError& e) {
    throw ParseError(last, e.what());
  }
}

NormalFormGame LoadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ReadGame(buffer.str());
}

void SaveGameFile(const NormalFormGame& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write game file '" + path + "'");
  out << WriteGame(game);
}

}  // namespace lfg
