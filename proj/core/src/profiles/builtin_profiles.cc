// Copyright 2026 The AQM Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <stdexcept>
#include <string>

#include "aqm/profiles/profile.h"

namespace aqm::profiles {
namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>> &builtin_profile_table();
}  // namespace detail

std::vector<std::string> builtin_profile_names() {
    std::vector<std::string> names;
    for (const auto &[name, text] : detail::builtin_profile_table()) {
        names.emplace_back(name);
    }
    return names;
}

std::string_view builtin_profile_json(std::string_view name) {
    for (const auto &[n, text] : detail::builtin_profile_table()) {
        if (n == name) {
            return text;
        }
    }
    std::string available;
    for (const auto &n : builtin_profile_names()) {
        available += (available.empty() ? "" : ", ") + n;
    }
    throw std::invalid_argument("unknown builtin profile '" + std::string(name) + "' (available: " + available + ")");
}

DeviceProfile builtin_profile(std::string_view name) {
    return parse_device_profile(builtin_profile_json(name));
}

}  // namespace aqm::profiles
