/*
   Copyright 2026 The scorza authors

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

#ifndef SCORZA_COMMON_HPP
#define SCORZA_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scorza {

// Error codes are stable identifiers; the CLI maps kind() to exit codes.
class Error : public std::runtime_error {
   public:
    enum class Kind { Math, Usage };

    Error(std::string code, const std::string& what, Kind kind = Kind::Math)
        : std::runtime_error(code + ": " + what), code_(std::move(code)), kind_(kind) {}

    const std::string& code() const noexcept { return code_; }
    Kind kind() const noexcept { return kind_; }

   private:
    std::string code_;
    Kind kind_;
};

[[noreturn]] inline void math_error(const std::string& code, const std::string& what) {
    throw Error(code, what, Error::Kind::Math);
}

[[noreturn]] inline void usage_error(const std::string& code, const std::string& what) {
    throw Error(code, what, Error::Kind::Usage);
}

}  // namespace scorza

#endif
