// Copyright 2026 The srh authors
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

#include <benchmark/benchmark.h>

#include "srh/lpc.hpp"
#include "srh/spectrum.hpp"
#include "srh/tracker.hpp"
#include "synth.hpp"

namespace {

void BM_AmplitudeSpectrum(benchmark::State& state) {
  const auto signal = synth::vowel(150.0, 0.2);
  std::vector<double> frame(signal.samples.begin(),
                            signal.samples.begin() + 1600);
  for (auto _ : state) {
    benchmark::DoNotOptimize(srh::amplitude_spectrum(frame, 16000, 1.0));
  }
}
BENCHMARK(BM_AmplitudeSpectrum);

void BM_InverseFilter(benchmark::State& state) {
  const auto signal = synth::vowel(150.0, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(srh::inverse_filter(signal, 12));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(signal.samples.size()));
}
BENCHMARK(BM_InverseFilter)->Arg(1)->Arg(5);

void BM_SrhCurve(benchmark::State& state) {
  const auto signal = synth::vowel(150.0, 0.2);
  std::vector<double> frame(signal.samples.begin(),
                            signal.samples.begin() + 1600);
  auto spectrum = srh::amplitude_spectrum(frame, 16000, 1.0);
  srh::normalize_energy_in_place(spectrum);
  for (auto _ : state) {
    benchmark::DoNotOptimize(srh::srh_curve(spectrum, 50.0, 400.0, 1.0, 5));
  }
}
BENCHMARK(BM_SrhCurve);

void BM_Track(benchmark::State& state) {
  const auto signal = synth::vowel(150.0, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(srh::track(signal, srh::TrackerConfig{}));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(signal.samples.size()));
}
BENCHMARK(BM_Track)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
