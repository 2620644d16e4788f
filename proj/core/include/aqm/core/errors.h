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

#ifndef AQM_CORE_ERRORS_H
#define AQM_CORE_ERRORS_H

#include <stdexcept>
#include <string>

#include "aqm/core/rules.h"

namespace aqm {

/// A request that cannot be met because a device or application does not
/// provide one of the five qubit rules (states, operations, connectivity,
/// coherence, readout). Callers map this to a distinct exit status.
class RuleViolation : public std::runtime_error {
   public:
    RuleViolation(AqmRule rule, const std::string &what)
        : std::runtime_error("rule " + std::to_string(static_cast<int>(rule)) + " (" +
                             std::string(rule_name(rule)) + "): " + what),
          rule_(rule),
          detail_(what) {
    }

    AqmRule rule() const noexcept {
        return rule_;
    }
    /// The message without the "rule N (name): " prefix.
    const std::string &detail() const noexcept {
        return detail_;
    }

   private:
    AqmRule rule_;
    std::string detail_;
};

}  // namespace aqm

#endif
