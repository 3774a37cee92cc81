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

/**
 * @file z4_vector.hpp
 * @brief Length-n vectors over Z4 and the elementwise/bilinear helpers the
 *        code machinery is built on.
 */

#ifndef Z4CODES_Z4_VECTOR_HPP
#define Z4CODES_Z4_VECTOR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "z4codes/errors.hpp"
#include "z4codes/z4.hpp"

namespace z4codes {

/// A vector over Z4; entry values are always kept in {0,1,2,3}.
using Z4Vector = std::vector<z4_t>;

inline Z4Vector parse_z4_vector(std::string_view s) {
    Z4Vector v;
    v.reserve(s.size());
    for (char ch : s) {
        if (ch < '0' || ch > '3') throw parse_error(std::string("invalid Z4 digit '") + ch + "'");
        v.push_back(static_cast<z4_t>(ch - '0'));
    }
    return v;
}

inline std::string format_z4_vector(const Z4Vector& v) {
    std::string s;
    s.reserve(v.size());
    for (z4_t x : v) s.push_back(static_cast<char>('0' + x));
    return s;
}

/// a += b.
inline void add_into(Z4Vector& a, const Z4Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = z4_add(a[i], b[i]);
}

/// a -= c·b.
inline void sub_scaled(Z4Vector& a, z4_t c, const Z4Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = z4_sub(a[i], z4_mul(c, b[i]));
}

inline Z4Vector scaled(z4_t c, const Z4Vector& v) {
    Z4Vector r(v);
    for (z4_t& x : r) x = z4_mul(c, x);
    return r;
}

/// Inner product a·b = Σ aᵢbᵢ (mod 4).
inline z4_t dot(const Z4Vector& a, const Z4Vector& b) {
    unsigned acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<unsigned>(a[i]) * b[i];
    return static_cast<z4_t>(acc & 3u);
}

/// Lee weight: coordinates valued 1 or 3 count 1, coordinates valued 2 count 2.
inline unsigned lee_weight(const Z4Vector& v) {
    unsigned w = 0;
    for (z4_t x : v) w += lee_weight(x);
    return w;
}

inline z4_t coordinate_sum(const Z4Vector& v) {
    unsigned s = 0;
    for (z4_t x : v) s += x;
    return static_cast<z4_t>(s & 3u);
}

inline bool is_zero(const Z4Vector& v) {
    for (z4_t x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace z4codes

#endif
