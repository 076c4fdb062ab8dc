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

#ifndef LFG_GAME_IO_H_
#define LFG_GAME_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "lfg/game.h"

namespace lfg {

// Malformed input text. The message carries the 1-based line number and the
// offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Canonical text form of a game:
//
//   lfg-game 1
//   n 3
//   actions 2 2 2
//   indexing row-major leader-fastest
//   payoffs 0
//   <m_n values per line, one line per followers' profile in id order>
//   payoffs 1
//   ...
//
// Values are written in shortest round-trip form, so Write(Read(Write(g)))
// reproduces the same bytes. Blank lines and '#' comments are accepted on
// input.
std::string WriteGame(const NormalFormGame& game);
NormalFormGame ReadGame(std::string_view text);

NormalFormGame LoadGameFile(const std::string& path);
void SaveGameFile(const NormalFormGame& game, const std::string& path);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatDouble(double value);

}  // namespace lfg

#endif  // LFG_GAME_IO_H_
