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
 * @file z4codes.hpp
 * @brief Umbrella header: the whole library in one include.
 */

#ifndef Z4CODES_Z4CODES_HPP
#define Z4CODES_Z4CODES_HPP

#include "z4codes/bigint.hpp"
#include "z4codes/bitvec.hpp"
#include "z4codes/cli.hpp"
#include "z4codes/errors.hpp"
#include "z4codes/families.hpp"
#include "z4codes/galois_ring.hpp"
#include "z4codes/gray.hpp"
#include "z4codes/quaternary_code.hpp"
#include "z4codes/weight_enumerators.hpp"
#include "z4codes/z4.hpp"
#include "z4codes/z4_poly.hpp"
#include "z4codes/z4_vector.hpp"

#endif  // Z4CODES_Z4CODES_HPP
