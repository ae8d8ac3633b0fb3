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

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "srh/audio.hpp"
#include "srh/spectrum.hpp"

namespace srh {

// Which spectrum the harmonic criterion inspects: the LPC residual
// (default) or the speech signal itself.
enum class SpectrumSource { kResidual, kSpeech };

struct TrackerConfig {
  double f0_min_hz = 50.0;
  double f0_max_hz = 400.0;
  int n_harm = 5;
  // Voicing threshold on the per-frame peak score. When unset, defaults to
  // 0.07 for the residual source and 0.18 for the speech source.
  std::optional<double> theta;
  double frame_length_ms = 100.0;
  double hop_ms = 10.0;
  int lpc_order = 12;
  SpectrumSource source = SpectrumSource::kResidual;
  double grid_step_hz = 1.0;

  double effective_theta() const {
    if (theta) return *theta;
    return source == SpectrumSource::kSpeech ? 0.18 : 0.07;
  }
};

// Harmonic-summation score of one frame over a uniform candidate grid.
// Values may go negative: the inter-harmonic penalty can dominate.
struct SrhCurve {
  std::vector<double> frequencies_hz;
  std::vector<double> values;

  // Index of the maximum; ties break toward the lowest frequency.
  std::size_t peak_index() const;
};

struct PitchFrame {
  double time_s = 0.0;     // frame center
  double f0_hz = 0.0;      // estimate, defined even when unvoiced
  double srh_score = 0.0;  // score at the estimate
  bool voiced = false;     // srh_score > theta, strict
};

struct PitchTrack {
  std::vector<PitchFrame> frames;
  TrackerConfig config_used;  // theta resolved to its effective value
  // First-pass speaker mean; 0 when no frame cleared the threshold in the
  // first pass (no speech detected; every frame comes out unvoiced).
  double f0_mean_hz = 0.0;
};

// Optional per-frame dump of the full-range first-pass curves, row-major
// values[frame * frequencies_hz.size() + bin].
struct SrhSurface {
  std::vector<double> times_s;
  std::vector<double> frequencies_hz;
  std::vector<double> values;
};

// Score of candidate frequency f: the spectrum magnitude at f plus, for
// each harmonic k = 2..n_harm, the magnitude at k*f minus the magnitude at
// (k - 1/2)*f. The subtraction knocks down even-harmonic candidates, whose
// inter-harmonic points land on true harmonics. Expects an
// energy-normalized spectrum when scores are compared against theta.
double srh_value(const AmplitudeSpectrum& spectrum, double f_hz, int n_harm);

// Dense evaluation on the inclusive grid f_lo, f_lo+step, ... (<= f_hi).
SrhCurve srh_curve(const AmplitudeSpectrum& spectrum, double f_lo_hz,
                   double f_hi_hz, double step_hz, int n_harm);

// Second-pass search range: [0.5*f0_mean, 2*f0_mean] clamped to the
// configured limits. Falls back to the full range if the intersection is
// empty (only possible for an f0_mean outside the configured limits).
std::pair<double, double> restrict_range(double f0_mean_hz,
                                         const TrackerConfig& config);

// Two-pass joint pitch and voicing estimation:
//   1. residual via inverse filtering (or the speech signal, per config),
//      100 ms Hann frames / 10 ms hop, magnitude spectrum at <= 1 Hz bins,
//      unit-energy normalization, peak of the score curve over the full
//      [f0_min, f0_max] grid;
//   2. speaker mean f0 over frames whose first-pass score clears theta,
//      then the same scan restricted to [0.5*mean, 2*mean];
//   3. voiced flag = (second-pass score > theta). No temporal smoothing.
// When surface is non-null it receives the first-pass curves.
PitchTrack track(const AudioSignal& signal, const TrackerConfig& config,
                 SrhSurface* surface = nullptr);

}  // namespace srh
