// Copyright 2026 The qca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCA_CLICK_LOG_HPP
#define QCA_CLICK_LOG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qca/simulate.hpp"

namespace qca {

/// Column layout of the per-pulse click log CSV.
inline constexpr const char* kClickLogHeader =
    "pulse_index,alice_bit,eve_outcome,action,bob_click,bob_bit,"
    "detector_a_click,detector_b_click";

/// Writes header plus one row per pulse. LF line endings, '.' decimals,
/// no locale dependence.
void write_click_log(std::ostream& out, const std::vector<ClickRecord>& log);

void write_click_log_file(const std::string& path,
                          const std::vector<ClickRecord>& log);

/// Parses a click log; raises IoError on any malformed header, row, or
/// field.
std::vector<ClickRecord> read_click_log(std::istream& in);

std::vector<ClickRecord> read_click_log_file(const std::string& path);

}  // namespace qca

#endif  // QCA_CLICK_LOG_HPP
