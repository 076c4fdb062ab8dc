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

#include <cstdio>
#include <filesystem>
#include <limits>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "lfg/bench.h"
#include "lfg/gadgets.h"

namespace lfg {
namespace {

constexpr char kSmallGame[] = R"(lfg-game 1
n 2
actions 2 2
indexing row-major leader-fastest
payoffs 0
1 2
3 4
payoffs 1
5 6   # trailing comment
7 8
)";

TEST(GameIoTest, ReadsTheLeaderFastestLayout) {
  const NormalFormGame game = ReadGame(kSmallGame);
  EXPECT_EQ(game.actions(), (std::vector<int>{2, 2}));
  const int profile[] = {1, 0};
  EXPECT_EQ(game.Payoff(0, profile), 3.0);
  EXPECT_EQ(game.Payoff(1, profile), 7.0);
}

TEST(GameIoTest, RoundTripIsExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> value(-1e6, 1e6);
  for (int n = 2; n <= 4; ++n) {
    const NormalFormGame random = GenerateRandomGame(n, 3, rng());
    EXPECT_EQ(ReadGame(WriteGame(random)), random);
    std::vector<std::vector<double>> payoffs = {
        {value(rng), 1.0 / 3.0, -0.0, std::numeric_limits<double>::denorm_min()},
        {std::numeric_limits<double>::max(), -1e-300, 0.1, 2.5}};
    const NormalFormGame odd({2, 2}, payoffs);
    EXPECT_EQ(ReadGame(WriteGame(odd)), odd);
  }
  EXPECT_EQ(ReadGame(WriteGame(MakeNonexistenceGame())), MakeNonexistenceGame());
}

TEST(GameIoTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "lfg_io_test.game";
  const NormalFormGame game = MakeArbitrarilyWorseGame(3.0);
  SaveGameFile(game, path.string());
  EXPECT_EQ(LoadGameFile(path.string()), game);
  std::filesystem::remove(path);
  EXPECT_THROW(LoadGameFile(path.string()), std::runtime_error);
}

int ErrorLine(const std::string& text) {
  try {
    ReadGame(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(GameIoTest, ErrorsCarryTheLineNumber) {
  EXPECT_EQ(ErrorLine(""), 1);
  EXPECT_EQ(ErrorLine("lfg-game 2\n"), 1);
  EXPECT_EQ(ErrorLine("lfg-game 1\nn two\n"), 2);
  EXPECT_EQ(ErrorLine("lfg-game 1\nn 2\nactions 2\n"), 3);
  std::string bad_value = kSmallGame;
  bad_value.replace(bad_value.find("3 4"), 3, "3 x");
  EXPECT_EQ(ErrorLine(bad_value), 7);
  std::string too_many = kSmallGame;
  too_many.replace(too_many.find("3 4"), 3, "3 4 9");
  EXPECT_EQ(ErrorLine(too_many), 7);
  EXPECT_EQ(ErrorLine(std::string(kSmallGame) + "extra\n"), 11);
  std::string truncated = kSmallGame;
  truncated.resize(truncated.find("7 8"));
  EXPECT_EQ(ErrorLine(truncated), 9);
}

TEST(GameIoTest, MessageNamesTheField) {
  try {
    ReadGame("lfg-game 1\nn 2\nactions 2 zero\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("actions"), std::string::npos);
  }
}

}  // namespace
}  // namespace lfg
