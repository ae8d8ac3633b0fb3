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

// Synthetic test signals with known ground truth.

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "srh/audio.hpp"
#include "srh/eval.hpp"

namespace synth {

struct Resonator {
  double freq_hz;
  double bandwidth_hz;
};

// Cascade of two-pole resonator sections y[n] = x[n] + 2r cos(w) y[n-1]
// - r^2 y[n-2].
inline std::vector<double> apply_resonators(
    const std::vector<double>& input, const std::vector<Resonator>& sections,
    int sample_rate) {
  std::vector<double> y = input;
  for (const auto& s : sections) {
    const double r =
        std::exp(-std::numbers::pi * s.bandwidth_hz / sample_rate);
    const double c =
        2.0 * r * std::cos(2.0 * std::numbers::pi * s.freq_hz / sample_rate);
    const double r2 = r * r;
    double y1 = 0.0;
    double y2 = 0.0;
    for (double& v : y) {
      const double out = v + c * y1 - r2 * y2;
      y2 = y1;
      y1 = out;
      v = out;
    }
  }
  return y;
}

inline void rescale_peak(std::vector<double>& samples, double peak) {
  double max_abs = 0.0;
  for (double v : samples) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs > 0.0) {
    const double g = peak / max_abs;
    for (double& v : samples) v *= g;
  }
}

// Impulse train at f0 through a fixed vocal-tract-like filter: two real
// poles for the glottal roll-off, one zero for lip radiation (net spectral
// tilt about -6 dB per octave, so the low harmonics dominate like in
// voiced speech) and two formant resonators. A crude sustained vowel with
// exactly known pitch.
inline srh::AudioSignal vowel(double f0_hz, double duration_s,
                              int sample_rate = 16000) {
  srh::AudioSignal signal;
  signal.sample_rate = sample_rate;
  const auto n = static_cast<std::size_t>(duration_s * sample_rate);
  std::vector<double> pulses(n, 0.0);
  const double period = sample_rate / f0_hz;
  for (double t = 0.0; t < static_cast<double>(n); t += period) {
    pulses[static_cast<std::size_t>(t)] = 1.0;
  }
  for (int pass = 0; pass < 2; ++pass) {
    double y1 = 0.0;
    for (double& v : pulses) {
      v += 0.96 * y1;
      y1 = v;
    }
  }
  double x1 = 0.0;
  for (double& v : pulses) {
    const double x0 = v;
    v -= x1;
    x1 = x0;
  }
  signal.samples = apply_resonators(
      pulses, {{700.0, 130.0}, {1250.0, 180.0}}, sample_rate);
  rescale_peak(signal.samples, 0.5);
  return signal;
}

inline srh::AudioSignal white_noise(double duration_s, unsigned seed,
                                    int sample_rate = 16000,
                                    double sigma = 0.1) {
  srh::AudioSignal signal;
  signal.sample_rate = sample_rate;
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, sigma);
  signal.samples.resize(static_cast<std::size_t>(duration_s * sample_rate));
  for (double& v : signal.samples) v = dist(rng);
  return signal;
}

// White noise through a fixed 6-section all-pole cascade: an AR(12)
// process with strong low-frequency correlation.
inline srh::AudioSignal ar12_process(double duration_s, unsigned seed,
                                     int sample_rate = 16000) {
  srh::AudioSignal noise = white_noise(duration_s, seed, sample_rate, 1.0);
  noise.samples = apply_resonators(noise.samples,
                                   {{500.0, 150.0},
                                    {1000.0, 200.0},
                                    {1800.0, 250.0},
                                    {2800.0, 300.0},
                                    {3800.0, 350.0},
                                    {5200.0, 400.0}},
                                   sample_rate);
  rescale_peak(noise.samples, 0.5);
  return noise;
}

// Constant-f0 reference covering [first_s, duration_s - first_s] at the
// given hop. f0 = 0 gives an all-unvoiced reference.
inline srh::GroundTruthTrack constant_truth(double f0_hz, double duration_s,
                                            double hop_s = 0.01,
                                            double first_s = 0.05) {
  srh::GroundTruthTrack truth;
  truth.hop_s = hop_s;
  for (std::size_t k = 0;; ++k) {
    const double t = first_s + static_cast<double>(k) * hop_s;
    if (t > duration_s - first_s + 1e-9) break;
    srh::GroundTruthFrame frame;
    frame.time_s = t;
    frame.f0_hz = f0_hz;
    truth.frames.push_back(frame);
  }
  return truth;
}

}  // namespace synth
