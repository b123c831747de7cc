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

#include "dirloss/numerics.hpp"

#include "dirloss/angles.hpp"
#include "dirloss/errors.hpp"

#include <cmath>

namespace dirloss
{

double bessel_i0_scaled(double x)
{
    if (!(x >= 0.0))
        throw ValidationError("bessel_i0_scaled: argument must be >= 0 and finite");

    if (x < 500.0)
    {
        // Power series of I0, summed until terms fall below machine precision,
        // then scaled by exp(-x). Both factors stay representable here.
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 1000; ++k)
        {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < sum * 1e-18)
                break;
        }
        return sum * std::exp(-x);
    }

    // Asymptotic expansion; at x >= 500 it converges below 1e-16 within a
    // handful of terms and never touches exp(x).
    const double inv8x = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 12; ++k)
    {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd * inv8x / static_cast<double>(k);
        sum += term;
        if (std::abs(term) < 1e-18)
            break;
    }
    return sum / std::sqrt(two_pi * x);
}

} // namespace dirloss
