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
 * @file bitvec.hpp
 * @brief Fixed-length binary vectors, plus a packed word form for the hot
 *        pairwise-distance loops.
 */

#ifndef Z4CODES_BITVEC_HPP
#define Z4CODES_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "z4codes/errors.hpp"

namespace z4codes {

/// A binary vector; entry values are always 0 or 1.
using BinaryVector = std::vector<std::uint8_t>;

/// A binary vector packed 64 coordinates per word, low coordinate = low bit.
using PackedBits = std::vector<std::uint64_t>;

inline BinaryVector parse_binary_vector(std::string_view s) {
    BinaryVector v;
    v.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw parse_error(std::string("invalid binary digit '") + ch + "'");
        v.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return v;
}

inline std::string format_binary_vector(const BinaryVector& v) {
    std::string s;
    s.reserve(v.size());
    for (auto b : v) s.push_back(static_cast<char>('0' + b));
    return s;
}

inline void xor_into(BinaryVector& a, const BinaryVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

/// Componentwise product over F2 (logical AND).
inline BinaryVector and_product(const BinaryVector& a, const BinaryVector& b) {
    BinaryVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

inline unsigned hamming_weight(const BinaryVector& v) {
    unsigned w = 0;
    for (auto b : v) w += b;
    return w;
}

inline unsigned hamming_distance(const BinaryVector& a, const BinaryVector& b) {
    unsigned w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += a[i] ^ b[i];
    return w;
}

inline PackedBits pack_bits(const BinaryVector& v) {
    PackedBits w((v.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) w[i / 64] |= (std::uint64_t{1} << (i % 64));
    return w;
}

inline unsigned packed_distance(const PackedBits& a, const PackedBits& b) {
    unsigned w = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        w += static_cast<unsigned>(std::popcount(a[i] ^ b[i]));
    return w;
}

}  // namespace z4codes

#endif
