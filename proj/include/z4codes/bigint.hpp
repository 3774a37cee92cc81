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
 * @file bigint.hpp
 * @brief Arbitrary-precision integers. Code sizes (up to 4^120 for the long
 *        constructions) and weight-enumerator coefficients overflow any
 *        fixed-width type, so exactness demands a big integer throughout.
 */

#ifndef Z4CODES_BIGINT_HPP
#define Z4CODES_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace z4codes {

using BigInt = boost::multiprecision::cpp_int;

/// 2^e as a BigInt.
inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace z4codes

#endif
