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


#ifndef AQM_MATCHER_REPORT_H
#define AQM_MATCHER_REPORT_H

#include <optional>
#include <string>
#include <string_view>

#include "aqm/matcher/matcher.h"

namespace aqm::matcher {

enum class ReportFormat {
    text,
    json,
};

/// Throws std::invalid_argument for anything but "text" or "json".
ReportFormat parse_report_format(std::string_view name);

/// JSON schema:
/// {"device", "demand", "rules": [{"rule", "demand", "support", "verdict",
///  "compensation": {"technique", "cost": {...}}?, "reason"?}], "overall",
///  "exit_code", "citations": {...}}
std::string render_report(const MatchReport &report, ReportFormat format);
MatchReport parse_report_json(std::string_view text);

/// Text: one row per demand, one column per device. JSON: {"demands",
/// "devices", "cells": [[report...]...]}.
std::string render_matrix(const MatchMatrix &matrix, ReportFormat format);

}  // namespace aqm::matcher

#endif
