// SPDX-License-Identifier: Apache-2.0
//
// dirloss - directional path loss engine for mmWave radio links
// Copyright (C) 2026 the dirloss authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "dirloss/plcorr.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace dirloss
{

// Scenario file format: `[scenario]`, `[tx]`, `[rx]` sections with
// `key = value` lines and `#` comments. Unknown keys are rejected with the
// offending line number; units are fixed by the key suffix.
Scenario parse_scenario(const std::filesystem::path& path);
Scenario parse_scenario_text(std::string_view text, const std::string& source_name = "<string>");

// Canonical serialization; parse(write(s)) == s.
std::string write_scenario(const Scenario& scenario);

} // namespace dirloss
