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

#ifndef Z4CODES_TESTS_TEST_UTIL_HPP
#define Z4CODES_TESTS_TEST_UTIL_HPP

#include <random>

#include "z4codes/quaternary_code.hpp"
#include "z4codes/z4_poly.hpp"

namespace z4codes::testutil {

/// The length-8 self-dual code, built through the full pipeline.
inline QuaternaryCode octacode() {
    const Z4Poly g = generator_poly_g(hensel_lift(BinPoly::from_digits("1011")), 3);
    return QuaternaryCode::cyclic(g, 7).extend_parity();
}

inline QuaternaryCode random_code(std::mt19937& rng, std::size_t n, std::size_t max_rows) {
    std::uniform_int_distribution<std::size_t> nrows(0, max_rows);
    std::uniform_int_distribution<int> digit(0, 3);
    std::vector<Z4Vector> rows(nrows(rng));
    for (Z4Vector& r : rows) {
        r.resize(n);
        for (z4_t& x : r) x = static_cast<z4_t>(digit(rng));
    }
    return QuaternaryCode(n, std::move(rows));
}

}  // namespace z4codes::testutil

#endif
