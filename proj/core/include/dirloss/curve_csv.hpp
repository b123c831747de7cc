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

namespace dirloss
{

// A path loss curve together with a display label (typically the file stem).
struct NamedCurve
{
    std::string label;
    PlCurve curve;
};

// CSV layout: header `d_m,pl_in_db,pl_corr_db,pl_out_db`, one row per
// distance, values rendered with four decimal places.
std::string curve_to_csv(const PlCurve& curve);
void write_curve_csv(const std::filesystem::path& path, const PlCurve& curve);

// Reads a CSV produced by write_curve_csv.  Rejects malformed headers and
// rows with a message naming the offending line.
PlCurve read_curve_csv(const std::filesystem::path& path);
NamedCurve read_named_curve(const std::filesystem::path& path);

} // namespace dirloss
