/*
   Copyright 2026 The z4codes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"
#include "z4codes/weight_enumerators.hpp"

using namespace z4codes;
using testutil::octacode;
using testutil::random_code;

namespace {

TrivariateWeightEnumerator tri(unsigned n,
                               std::vector<std::tuple<unsigned, unsigned, unsigned, long>> ts) {
    TrivariateWeightEnumerator e(n);
    for (auto [a, b, c, k] : ts) e.add(a, b, c, k);
    return e;
}

BivariateWeightEnumerator bi(unsigned n, std::vector<std::tuple<unsigned, unsigned, long>> ts) {
    BivariateWeightEnumerator e(n);
    for (auto [a, b, k] : ts) e.add(a, b, k);
    return e;
}

/// The Hamming weight enumerator of the length-16 image of the octacode.
BivariateWeightEnumerator nr_hwe() {
    return bi(16, {{16, 0, 1}, {10, 6, 112}, {8, 8, 30}, {6, 10, 112}, {0, 16, 1}});
}

}  // namespace

TEST_CASE("swe of a tiny code and of the zero code", "[enum]") {
    const auto e = swe(QuaternaryCode(2, {Z4Vector{1, 1}}), 16);
    REQUIRE(e == tri(2, {{2, 0, 0, 1}, {0, 2, 0, 2}, {0, 0, 2, 1}}));  // x² + 2y² + z²
    REQUIRE(e.mass() == 4);
    const auto z = swe(QuaternaryCode::zero(5), 16);
    REQUIRE(z == tri(5, {{5, 0, 0, 1}}));
    REQUIRE_THROWS_WITH(swe(octacode(), 255), "code too large to enumerate");
}

TEST_CASE("swe of the length-8 self-dual code", "[enum]") {
    const auto e = swe(octacode(), 1 << 10);
    REQUIRE(e == tri(8, {{8, 0, 0, 1},
                         {4, 0, 4, 14},
                         {3, 4, 1, 112},
                         {1, 4, 3, 112},
                         {0, 8, 0, 16},
                         {0, 0, 8, 1}}));
    REQUIRE(e.mass() == 256);
    REQUIRE(e.min_lee_weight() == 6);
    // Self-duality fixes the enumerator under the dual transform.
    REQUIRE(macwilliams_swe(e, 256) == e);
}

TEST_CASE("dual transform on a hand-expanded example", "[enum]") {
    // (1/4)[(x+2y+z)² + 2(x−z)² + (x−2y+z)²] = x² + 2y² + z².
    const auto e = tri(2, {{2, 0, 0, 1}, {0, 2, 0, 2}, {0, 0, 2, 1}});
    REQUIRE(macwilliams_swe(e, 4) == e);
    // And it matches the independently computed dual's census.
    const QuaternaryCode d(2, {Z4Vector{1, 1}});
    REQUIRE(macwilliams_swe(swe(d, 16), 4) == swe(d.dual(), 16));
}

TEST_CASE("dual transform rejects non-enumerators", "[enum]") {
    REQUIRE_THROWS_WITH(macwilliams_swe(tri(2, {{2, 0, 0, 1}}), 4),
                        "input is not a valid code enumerator");
    REQUIRE_THROWS_WITH(macwilliams_swe(tri(2, {{2, 0, 0, 1}}), 0),
                        "input is not a valid code enumerator");
}

TEST_CASE("dual transform matches the dual's census on random codes", "[enum]") {
    std::mt19937 rng(2024u);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const QuaternaryCode c = random_code(rng, n, 4);
        const auto lhs = macwilliams_swe(swe(c, 1 << 16), c.size());
        REQUIRE(lhs == swe(c.dual(), 1 << 16));
        // Mass conservation: |D⊥| = 4^n / |D|.
        REQUIRE(lhs.mass() == pow2(2 * static_cast<unsigned>(n)) / c.size());
        // Involution: transforming back recovers the original.
        REQUIRE(macwilliams_swe(lhs, lhs.mass()) == swe(c, 1 << 16));
    }
}

TEST_CASE("Gray bridge substitution", "[enum]") {
    const auto e = tri(2, {{2, 0, 0, 1}, {0, 2, 0, 2}, {0, 0, 2, 1}});
    REQUIRE(hwe_from_swe(e) == bi(4, {{4, 0, 1}, {2, 2, 2}, {0, 4, 1}}));  // x⁴+2x²y²+y⁴
    REQUIRE(hwe_from_swe(tri(5, {{5, 0, 0, 1}})) == bi(10, {{10, 0, 1}}));
    REQUIRE(hwe_from_swe(swe(octacode(), 1 << 10)) == nr_hwe());
}

TEST_CASE("Gray bridge equals the direct image census", "[enum]") {
    REQUIRE(hwe_direct(gray_image(octacode(), 1 << 10), 1 << 10) == nr_hwe());
    std::mt19937 rng(31u);
    for (int trial = 0; trial < 50; ++trial) {
        const QuaternaryCode c = random_code(rng, 1 + trial % 6, 4);
        REQUIRE(hwe_from_swe(swe(c, 1 << 16)) == hwe_direct(gray_image(c, 1 << 16), 1 << 16));
    }
}

TEST_CASE("binary transform basics", "[enum]") {
    // Full binary code of length 1: W = x + y, dual is the zero code: W' = x.
    REQUIRE(binary_macwilliams(bi(1, {{1, 0, 1}, {0, 1, 1}}), 2) == bi(1, {{1, 0, 1}}));
    // The length-16 image enumerator is its own transform.
    REQUIRE(binary_macwilliams(nr_hwe(), 256) == nr_hwe());
    REQUIRE_THROWS_WITH(binary_macwilliams(bi(2, {{2, 0, 1}}), 4),
                        "not a distance-invariant-consistent enumerator");
}

TEST_CASE("the two dual routes agree at m=3", "[enum]") {
    // Transforming the binary enumerator directly, or transforming the
    // quaternary enumerator and then applying the Gray bridge, must agree.
    const auto swe_d = swe(octacode(), 1 << 10);
    const auto w_k = hwe_direct(gray_image(octacode(), 1 << 10), 1 << 10);
    REQUIRE(binary_macwilliams(w_k, 256) == hwe_from_swe(macwilliams_swe(swe_d, 256)));
}

TEST_CASE("enumerator JSON round-trips with deterministic term order", "[enum]") {
    const auto e = swe(octacode(), 1 << 10);
    const nlohmann::json j = e.to_json();
    REQUIRE(TrivariateWeightEnumerator::from_json(j) == e);
    // Lexicographic by exponent triple.
    std::vector<unsigned> n0s;
    for (const auto& t : j.at("terms")) n0s.push_back(t.at("n0").get<unsigned>());
    REQUIRE(std::is_sorted(n0s.begin(), n0s.end()));
    REQUIRE(j.at("terms").front().at("coeff").get<std::string>() == "1");

    const auto w = nr_hwe();
    REQUIRE(BivariateWeightEnumerator::from_json(w.to_json()) == w);
}

TEST_CASE("enumerator JSON rejects malformed input", "[enum]") {
    REQUIRE_THROWS_AS(TrivariateWeightEnumerator::from_json(nlohmann::json{{"n", 2}}),
                      parse_error);
    const nlohmann::json bad_coeff = {
        {"n", 2}, {"terms", {{{"n0", 2}, {"n1", 0}, {"n2", 0}, {"coeff", "xyz"}}}}};
    REQUIRE_THROWS_AS(TrivariateWeightEnumerator::from_json(bad_coeff), parse_error);
    const nlohmann::json bad_sum = {
        {"n", 2}, {"terms", {{{"n0", 3}, {"n1", 0}, {"n2", 0}, {"coeff", "1"}}}}};
    REQUIRE_THROWS_WITH(TrivariateWeightEnumerator::from_json(bad_sum),
                        "exponents do not sum to the degree");
}

TEST_CASE("enumerators never run through floating point", "[enum]") {
    // A coefficient beyond 2^53 survives a transform round-trip exactly.
    TrivariateWeightEnumerator big(1);
    big.add(1, 0, 0, BigInt("18014398509481984228"));  // > 2^64
    const auto round = macwilliams_swe(macwilliams_swe(big, 1), 4);
    REQUIRE(round.terms().rbegin()->second == BigInt("18014398509481984228"));
}
