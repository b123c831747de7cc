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

namespace dirloss
{

// Exponentially scaled modified Bessel function exp(-x) * I0(x), x >= 0.
// Stays bounded for large arguments where I0 itself overflows.
double bessel_i0_scaled(double x);

namespace detail
{

// Bisection on a bracketing interval [lo, hi] with f(lo) and f(hi) of
// opposite sign. Runs a fixed iteration count; the caller picks it so the
// interval collapses well below the needed resolution.
template <typename F>
double bisect(F&& f, double lo, double hi, int iterations)
{
    double flo = f(lo);
    for (int i = 0; i < iterations; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((flo < 0.0) == (fmid < 0.0))
        {
            lo = mid;
            flo = fmid;
        }
        else
        {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

} // namespace dirloss
