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

#include "dirloss/mpm.hpp"
#include "dirloss/patterns.hpp"
#include "dirloss/plcorr.hpp"
#include "dirloss/tr38901.hpp"

#include <benchmark/benchmark.h>

namespace
{

using namespace dirloss;

void BM_PatternGainSinc(benchmark::State& state)
{
    const AzimuthPattern pattern(sinc_spec(8.0));
    double phi = -180.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(pattern.gain(phi));
        phi += 0.37;
        if (phi >= 180.0)
            phi -= 360.0;
    }
}
BENCHMARK(BM_PatternGainSinc);

void BM_PatternGainGnodeb(benchmark::State& state)
{
    const AzimuthPattern pattern = synthesize_gnodeb_azimuth();
    double phi = -180.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(pattern.gain(phi));
        phi += 0.37;
        if (phi >= 180.0)
            phi -= 360.0;
    }
}
BENCHMARK(BM_PatternGainGnodeb);

void BM_SynthesizePas(benchmark::State& state)
{
    const int n_phi = static_cast<int>(state.range(0));
    const PowerDelayProfile pdp = scaled_tdl(TdlModelId::TdlC, 266e-9);
    const MpmGeometry geom = build_geometry(pdp, 120.0, 60.0);
    const AzimuthPattern tx(sinc_spec(8.0));
    const AzimuthPattern rx(ue_spec());
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize_pas(geom, tx, rx, 180.0, 0.0, n_phi));
    state.SetComplexityN(n_phi);
}
BENCHMARK(BM_SynthesizePas)->Arg(1800)->Arg(3600)->Arg(7200)->Complexity(benchmark::oN);

void BM_PlCorrection(benchmark::State& state)
{
    Scenario s;
    s.condition = Condition::Nlos;
    s.tx_spec = gnodeb_spec();
    s.rx_spec = ue_spec();
    const PowerDelayProfile pdp = scaled_tdl(s.tdl_model(), s.sigma_tau_s);
    for (auto _ : state)
        benchmark::DoNotOptimize(pl_correction(s, pdp, 120.0));
}
BENCHMARK(BM_PlCorrection);

void BM_SweepCurve(benchmark::State& state)
{
    Scenario s;
    s.condition = Condition::Nlos;
    s.tx_spec = sinc_spec(8.0);
    s.rx_spec = ue_spec();
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_curve(s));
}
BENCHMARK(BM_SweepCurve);

} // namespace

BENCHMARK_MAIN();
