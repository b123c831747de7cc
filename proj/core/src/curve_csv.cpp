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

#include "dirloss/curve_csv.hpp"

#include "dirloss/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dirloss
{

namespace
{

constexpr const char* csv_header = "d_m,pl_in_db,pl_corr_db,pl_out_db";

std::string trim_cr(std::string line)
{
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
        line.pop_back();
    return line;
}

} // namespace

std::string curve_to_csv(const PlCurve& curve)
{
    std::ostringstream out;
    out << csv_header << "\n";
    char row[160];
    for (const PlPoint& p : curve.rows)
    {
        std::snprintf(row, sizeof row, "%.4f,%.4f,%.4f,%.4f\n", p.d_m, p.pl_in_db, p.pl_corr_db,
                      p.pl_out_db);
        out << row;
    }
    return out.str();
}

void write_curve_csv(const std::filesystem::path& path, const PlCurve& curve)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot open output file: " + path.string());
    out << curve_to_csv(curve);
    if (!out)
        throw ValidationError("write failed: " + path.string());
}

PlCurve read_curve_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open curve file: " + path.string());

    std::string line;
    int line_no = 0;
    if (!std::getline(in, line))
        throw ValidationError(path.string() + ": empty file");
    ++line_no;
    if (trim_cr(line) != csv_header)
        throw ValidationError(path.string() + ":1: expected header `" + std::string(csv_header) +
                              "`");

    PlCurve curve;
    while (std::getline(in, line))
    {
        ++line_no;
        line = trim_cr(line);
        if (line.empty())
            continue;
        PlPoint p{};
        char trailing = 0;
        const int got = std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf%c", &p.d_m, &p.pl_in_db,
                                    &p.pl_corr_db, &p.pl_out_db, &trailing);
        if (got != 4)
        {
            std::ostringstream msg;
            msg << path.string() << ":" << line_no << ": expected four comma-separated numbers";
            throw ValidationError(msg.str());
        }
        curve.rows.push_back(p);
    }
    if (curve.rows.empty())
        throw ValidationError(path.string() + ": no data rows");
    return curve;
}

NamedCurve read_named_curve(const std::filesystem::path& path)
{
    return NamedCurve{path.stem().string(), read_curve_csv(path)};
}

} // namespace dirloss
