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

#ifndef Z4CODES_Z4_HPP
#define Z4CODES_Z4_HPP

#include <cstdint>

namespace z4codes {

/// A residue mod 4. Every API stores values in {0,1,2,3}.
using z4_t = std::uint8_t;

constexpr z4_t z4_add(z4_t a, z4_t b) noexcept { return static_cast<z4_t>((a + b) & 3u); }
constexpr z4_t z4_sub(z4_t a, z4_t b) noexcept { return static_cast<z4_t>((a + 4u - b) & 3u); }
constexpr z4_t z4_mul(z4_t a, z4_t b) noexcept { return static_cast<z4_t>((a * b) & 3u); }
constexpr z4_t z4_neg(z4_t a) noexcept { return static_cast<z4_t>((4u - a) & 3u); }

constexpr bool z4_is_unit(z4_t a) noexcept { return a == 1u || a == 3u; }

/// Multiplicative inverse of a unit; 1 and 3 are self-inverse.
constexpr z4_t z4_inv(z4_t a) noexcept { return a; }

/// Lee weight of a single residue: 0,1,2,3 -> 0,1,2,1.
constexpr unsigned lee_weight(z4_t a) noexcept { return a == 2u ? 2u : (a == 0u ? 0u : 1u); }

}  // namespace z4codes

#endif
