// Copyright 2026 The qsawtooth authors
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

#include <catch2/catch_amalgamated.hpp>

#include "qsaw/rng.hpp"

using qsaw::rng::SplitMix64;

TEST_CASE("streams are deterministic and independent", "[rng]") {
    auto a = SplitMix64::stream(42, 0);
    auto b = SplitMix64::stream(42, 0);
    auto c = SplitMix64::stream(42, 1);
    bool differs = false;
    for (int i = 0; i < 16; ++i) {
        const auto va = a.next_u64();
        REQUIRE(va == b.next_u64());
        if (va != c.next_u64()) differs = true;
    }
    REQUIRE(differs);
}

TEST_CASE("doubles land in [0,1) with mean near 1/2", "[rng]") {
    auto g = SplitMix64::stream(7, 3);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = g.next_double();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    REQUIRE(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("symmetric draws stay inside [-a, a]", "[rng]") {
    auto g = SplitMix64::stream(9, 0);
    for (int i = 0; i < 10000; ++i) {
        const double v = g.symmetric(1e-3);
        REQUIRE(std::abs(v) <= 1e-3);
    }
}
