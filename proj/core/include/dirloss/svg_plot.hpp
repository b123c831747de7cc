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

#include "dirloss/curve_csv.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dirloss
{

// Renders pl_out over distance for one or more curves as a standalone SVG
// document.  Output is deterministic: identical inputs produce identical
// bytes.  Colors cycle through a fixed palette in input order; the legend
// shows each curve's label.
std::string render_curves_svg(const std::vector<NamedCurve>& curves);
void write_curves_svg(const std::filesystem::path& path, const std::vector<NamedCurve>& curves);

} // namespace dirloss
