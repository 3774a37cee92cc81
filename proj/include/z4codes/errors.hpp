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

#ifndef Z4CODES_ERRORS_HPP
#define Z4CODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace z4codes {

/// Thrown when an enumeration or pairwise scan would exceed the caller's cap.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed digit strings, code files, or enumerator JSON.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace z4codes

#endif
