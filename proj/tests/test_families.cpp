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

#include "test_util.hpp"
#include "z4codes/families.hpp"

using namespace z4codes;

TEST_CASE("default binary modulus per degree", "[families]") {
    CHECK(default_primitive_poly(2).digits() == "111");
    CHECK(default_primitive_poly(3).digits() == "1011");
    CHECK(default_primitive_poly(4).digits() == "10011");
    CHECK(default_primitive_poly(5).digits() == "101001");

    for (unsigned m = 2; m <= 9; ++m) {
        const BinPoly p = default_primitive_poly(m);
        CHECK(p.degree() == static_cast<int>(m));
        CHECK(is_primitive(p));
    }

    // First-in-lexicographic-order among primitive candidates, except for
    // the pinned degree 5.
    for (unsigned m : {2u, 3u, 4u, 6u, 7u}) {
        const std::string chosen = default_primitive_poly(m).digits();
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << (m - 1)); ++k) {
            std::vector<std::uint8_t> bits(m + 1, 0u);
            bits[0] = bits[m] = 1u;
            for (unsigned i = 1; i < m; ++i)
                bits[i] = static_cast<std::uint8_t>((k >> (m - 1 - i)) & 1u);
            const BinPoly cand(std::move(bits));
            if (cand.digits() == chosen) break;
            CHECK_FALSE(is_primitive(cand));
        }
    }

    CHECK_THROWS_AS(default_primitive_poly(0), std::invalid_argument);
}

TEST_CASE("quaternary pair construction and parameters", "[families]") {
    const QuaternaryCode k3 = kerdock_quaternary(3);
    CHECK(k3.length() == 8);
    CHECK(k3.size() == 256);
    CHECK(equal_as_sets(k3, testutil::octacode()));
    CHECK(equal_as_sets(octacode(), k3));
    CHECK(equal_as_sets(k3, k3.dual()));

    const QuaternaryCode p3 = preparata_quaternary(3);
    CHECK(equal_as_sets(p3, k3));

    const QuaternaryCode k5 = kerdock_quaternary(5);
    CHECK(k5.length() == 32);
    CHECK(k5.size() == 4096);
    k5.for_each_codeword([](const Z4Vector& w) {
        if (coordinate_sum(w) != 0u) FAIL("parity digit violated");
    });

    const QuaternaryCode p5 = preparata_quaternary(5);
    CHECK(p5.length() == 32);
    CHECK(p5.size() == pow2(52));
    CHECK(equal_as_sets(p5, k5.dual()));
    // No nonzero codeword of Lee weight five or less.
    CHECK_FALSE(p5.min_lee_weight_search(5).has_value());

    CHECK_THROWS_WITH(kerdock_quaternary(1), "m must be at least 2");
    CHECK_THROWS_WITH(kerdock_quaternary(4, BinPoly::from_digits("1011")),
                      "h2 degree must equal m");
    // X^3 + 1 reduces; the lift step rejects it.
    CHECK_THROWS_WITH(preparata_quaternary(3, BinPoly::from_digits("1001")),
                      "not primitive");
}

TEST_CASE("binary images carry the classical parameters", "[families]") {
    const BinaryCode nr = nordstrom_robinson();
    CHECK(nr.length() == 16);
    CHECK(nr.size() == 256);
    CHECK(min_distance_explicit(nr, std::uint64_t{1} << 10, 2) == 6);
    CHECK(is_distance_invariant(nr, std::uint64_t{1} << 10));
    CHECK_FALSE(nr.is_linear_form());

    // Degree 3 is the coincidence point: both images are that same code.
    CHECK(equal_as_sets(kerdock_binary(3), preparata_binary(3)));
    CHECK(equal_as_sets(kerdock_binary(3), nr));

    const BinaryCode k5 = kerdock_binary(5);
    CHECK(k5.length() == 64);
    CHECK(k5.size() == 4096);
    CHECK(min_distance_explicit(k5, std::uint64_t{1} << 13, 4) == 28);

    // The degree-5 Preparata-type image is far beyond any explicit list.
    CHECK_THROWS_AS(preparata_binary(5), cap_exceeded);
}

TEST_CASE("implicit handle for the degree-5 Preparata-type image", "[families]") {
    const PreparataBinary pb5(5);
    CHECK(pb5.m() == 5);
    CHECK(pb5.length() == 64);
    CHECK(pb5.size() == pow2(52));
    CHECK(pb5.quaternary_swe().mass() == pow2(52));
    CHECK(pb5.hwe().mass() == pow2(52));
    CHECK(pb5.hwe().degree() == 64);
    CHECK(pb5.min_distance() == 6);
    CHECK_THROWS_AS(pb5.words(), cap_exceeded);

    // At degree 3 the handle agrees with the explicit route.
    const PreparataBinary pb3(3);
    CHECK(pb3.hwe() == hwe_direct(preparata_binary(3), std::uint64_t{1} << 10));
    CHECK(pb3.min_distance() == 6);
    CHECK(equal_as_sets(pb3.words(), nordstrom_robinson()));
}

TEST_CASE("dual-route weight enumerators bridge to the binary side", "[families]") {
    // The binary image of the dual pair satisfies the binary transform
    // relation even though neither image is linear: the Hamming enumerator
    // of one side equals the transform of the other side's.
    for (unsigned m : {3u, 5u}) {
        const QuaternaryCode kerdock = kerdock_quaternary(m);
        const TrivariateWeightEnumerator swe_k =
            swe(kerdock, default_enumeration_cap);
        const BivariateWeightEnumerator via_quaternary = hwe_from_swe(
            macwilliams_swe(swe_k, kerdock.size()));
        const BivariateWeightEnumerator via_binary = binary_macwilliams(
            hwe_from_swe(swe_k), kerdock.size());
        CHECK(via_quaternary == via_binary);
        CHECK(via_quaternary == PreparataBinary(m).hwe());
    }
}

TEST_CASE("linear span of the degree-5 Preparata-type image", "[families]") {
    const BinaryCode span = gray_image_linear_span(preparata_quaternary(5));
    REQUIRE(span.is_linear_form());
    CHECK(span.length() == 64);
    // Weight-1 and weight-2 membership: 64 + 2016 candidates.
    const std::optional<unsigned> d =
        min_distance_binary(span, default_enumeration_cap, 2, 1);
    REQUIRE(d.has_value());
    CHECK(*d == 2);
}

TEST_CASE("trace description cross-validates the pipeline", "[families]") {
    CHECK(trace_crosscheck(3));
    CHECK(trace_crosscheck(5));
    CHECK(trace_construction_swe(3) ==
          swe(testutil::octacode(), std::uint64_t{1} << 10));
}

TEST_CASE("trace description equals the cyclic code under rotation", "[families]") {
    // Stronger than the census contract: moving the leading extended digit
    // to the back turns the trace words into exactly the extended cyclic
    // code, coordinate for coordinate. Membership of all 4^{m+1} distinct
    // words in a group of the same size forces set equality.
    for (unsigned m : {3u, 5u}) {
        const Z4Poly h = hensel_lift(default_primitive_poly(m));
        const GaloisRing ring(m, h);
        const QuaternaryCode cyclic_side = kerdock_quaternary(m);
        for (const Z4Vector& w : kerdock_via_trace(ring)) {
            Z4Vector rotated(w.begin() + 1, w.end());
            rotated.push_back(w[0]);
            if (!cyclic_side.contains(rotated)) {
                FAIL("rotated trace word escapes the cyclic-side code");
            }
        }
    }
}

TEST_CASE("family verification reports", "[families]") {
    const FamilyReport r3 = verify_family(3);
    CHECK(r3.family == "kerdock-preparata");
    CHECK(r3.m == 3);
    CHECK(r3.all_pass());
    CHECK(r3.fields.size() >= 10);
    CHECK(r3.to_text().find("FAIL") == std::string::npos);

    const nlohmann::json j = r3.to_json();
    CHECK(j.at("family") == "kerdock-preparata");
    CHECK(j.at("m") == 3);
    REQUIRE(j.at("fields").is_array());
    for (const auto& f : j.at("fields")) {
        CHECK(f.contains("name"));
        CHECK(f.contains("expected"));
        CHECK(f.contains("actual"));
        CHECK(f.at("pass").is_boolean());
    }

    const FamilyReport r5 = verify_family(5, std::nullopt, 2);
    CHECK(r5.all_pass());
    CHECK(r5.to_text().find("28") != std::string::npos);

    const FamilyReport r7 = verify_family(7);
    CHECK(r7.all_pass());
    bool saw_skip = false;
    for (const auto& f : r7.fields)
        if (f.actual == "not checked (beyond budget)") saw_skip = true;
    CHECK(saw_skip);

    CHECK_THROWS_WITH(verify_family(4), "m must be odd and at least 3");
    CHECK_THROWS_WITH(verify_family(1), "m must be odd and at least 3");
}
