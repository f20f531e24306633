// Copyright 2026 The qroute developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qroute/rng.hpp"

using qroute::Rng;

TEST_CASE("same seed reproduces the stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge") {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 64; ++i) same += a.next_u64() == b.next_u64();
  REQUIRE(same == 0);
}

TEST_CASE("below stays in range and hits every value") {
  Rng rng(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = rng.below(13);
    REQUIRE(v < 13);
    seen.insert(v);
  }
  REQUIRE(seen.size() == 13);
}

TEST_CASE("below of one is always zero") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) REQUIRE(rng.below(1) == 0);
}

TEST_CASE("below is roughly uniform") {
  Rng rng(11);
  constexpr int kBuckets = 8, kDraws = 80000;
  std::vector<int> counts(kBuckets, 0);
  for (int i = 0; i < kDraws; ++i) ++counts[rng.below(kBuckets)];
  // Expected 10000 per bucket; allow 5% slack.
  for (int c : counts) {
    REQUIRE(c > 9500);
    REQUIRE(c < 10500);
  }
}

TEST_CASE("range is inclusive of both endpoints") {
  Rng rng(5);
  bool lo = false, hi = false;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.range(3, 6);
    REQUIRE(v >= 3);
    REQUIRE(v <= 6);
    lo = lo || v == 3;
    hi = hi || v == 6;
  }
  REQUIRE(lo);
  REQUIRE(hi);
}

TEST_CASE("unit stays in the half-open interval") {
  Rng rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("chance respects the extremes") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    REQUIRE_FALSE(rng.chance(0.0));
    REQUIRE(rng.chance(1.0));
  }
}

TEST_CASE("shuffle permutes without loss") {
  Rng rng(17);
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  const std::vector<int> original = v;
  rng.shuffle(v);
  REQUIRE(v != original);  // 50! makes a fixed point absurdly unlikely
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  REQUIRE(sorted == original);
}

TEST_CASE("fork produces an independent stream") {
  Rng a(21);
  Rng forked(a.fork());
  Rng b(21);
  // The fork must not replay the parent seed's stream.
  int same = 0;
  for (int i = 0; i < 64; ++i) same += forked.next_u64() == b.next_u64();
  REQUIRE(same == 0);
}

TEST_CASE("mix_seed separates streams") {
  REQUIRE(qroute::mix_seed(1) != qroute::mix_seed(2));
  REQUIRE(qroute::mix_seed(1, 0) != qroute::mix_seed(1, 1));
  REQUIRE(qroute::mix_seed(1, 0) != qroute::mix_seed(2, 0));
}
