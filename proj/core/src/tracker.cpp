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

#include "srh/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "srh/lpc.hpp"

namespace srh {

namespace {

constexpr double kTargetBinHz = 1.0;
constexpr double kGridEps = 1e-9;

void validate_config(const TrackerConfig& config) {
  if (!(config.f0_min_hz > 0.0) || !(config.f0_max_hz > config.f0_min_hz)) {
    throw std::invalid_argument("need 0 < f0_min < f0_max");
  }
  if (config.n_harm < 1) throw std::invalid_argument("n_harm must be >= 1");
  if (!(config.grid_step_hz > 0.0)) {
    throw std::invalid_argument("grid step must be positive");
  }
  if (config.lpc_order < 1) throw std::invalid_argument("lpc order >= 1");
  if (!(config.frame_length_ms > 0.0) || !(config.hop_ms > 0.0)) {
    throw std::invalid_argument("frame length and hop must be positive");
  }
}

}  // namespace

std::size_t SrhCurve::peak_index() const {
  const auto it = std::max_element(values.begin(), values.end());
  return static_cast<std::size_t>(it - values.begin());
}

double srh_value(const AmplitudeSpectrum& spectrum, double f_hz, int n_harm) {
  double score = spectrum_at(spectrum, f_hz);
  for (int k = 2; k <= n_harm; ++k) {
    score += spectrum_at(spectrum, k * f_hz);
    score -= spectrum_at(spectrum, (k - 0.5) * f_hz);
  }
  return score;
}

SrhCurve srh_curve(const AmplitudeSpectrum& spectrum, double f_lo_hz,
                   double f_hi_hz, double step_hz, int n_harm) {
  if (!(step_hz > 0.0) || f_lo_hz < 0.0 || f_hi_hz < f_lo_hz) {
    throw std::invalid_argument("bad candidate grid");
  }
  const auto count = static_cast<std::size_t>(
                         std::floor((f_hi_hz - f_lo_hz) / step_hz + kGridEps)) +
                     1;
  SrhCurve curve;
  curve.frequencies_hz.resize(count);
  curve.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = f_lo_hz + static_cast<double>(i) * step_hz;
    curve.frequencies_hz[i] = f;
    curve.values[i] = srh_value(spectrum, f, n_harm);
  }
  return curve;
}

std::pair<double, double> restrict_range(double f0_mean_hz,
                                         const TrackerConfig& config) {
  const double lo = std::max(config.f0_min_hz, 0.5 * f0_mean_hz);
  const double hi = std::min(config.f0_max_hz, 2.0 * f0_mean_hz);
  if (lo > hi) return {config.f0_min_hz, config.f0_max_hz};
  return {lo, hi};
}

PitchTrack track(const AudioSignal& signal, const TrackerConfig& config,
                 SrhSurface* surface) {
  validate_signal(signal);
  validate_config(config);
  if (config.n_harm * config.f0_max_hz > signal.sample_rate / 2.0) {
    throw std::invalid_argument(
        "n_harm * f0_max exceeds the Nyquist frequency");
  }
  const double theta = config.effective_theta();

  const AudioSignal* analyzed = &signal;
  ResidualSignal residual;
  if (config.source == SpectrumSource::kResidual) {
    residual = inverse_filter(signal, config.lpc_order);
    analyzed = &residual;
  }

  FrameSpec spec;
  spec.frame_length_ms = config.frame_length_ms;
  spec.hop_ms = config.hop_ms;
  FramePlan plan(analyzed->samples.size(), analyzed->sample_rate, spec);
  const std::size_t n_frames = plan.count();

  // First pass: full-range curves, kept for reuse in the second pass
  // (its grid is the same f0_min-anchored lattice, only narrowed).
  std::vector<SrhCurve> curves(n_frames);
  std::vector<double> frame;
  double mean_acc = 0.0;
  std::size_t mean_n = 0;
  for (std::size_t i = 0; i < n_frames; ++i) {
    plan.extract(analyzed->samples, i, frame);
    AmplitudeSpectrum spectrum =
        amplitude_spectrum(frame, analyzed->sample_rate, kTargetBinHz);
    normalize_energy_in_place(spectrum);  // all-zero stays all-zero
    curves[i] = srh_curve(spectrum, config.f0_min_hz, config.f0_max_hz,
                          config.grid_step_hz, config.n_harm);
    const std::size_t peak = curves[i].peak_index();
    if (curves[i].values[peak] > theta) {
      mean_acc += curves[i].frequencies_hz[peak];
      ++mean_n;
    }
  }

  PitchTrack result;
  result.config_used = config;
  result.config_used.theta = theta;
  result.f0_mean_hz = mean_n > 0 ? mean_acc / static_cast<double>(mean_n)
                                 : 0.0;

  // Second pass re-picks the peak inside the speaker range. With no voiced
  // first-pass frame the full range stands.
  std::size_t i_lo = 0;
  std::size_t i_hi = curves.empty() ? 0 : curves[0].values.size() - 1;
  if (result.f0_mean_hz > 0.0) {
    const auto [lo, hi] = restrict_range(result.f0_mean_hz, config);
    i_lo = static_cast<std::size_t>(std::ceil(
        (lo - config.f0_min_hz) / config.grid_step_hz - kGridEps));
    i_hi = static_cast<std::size_t>(std::floor(
        (hi - config.f0_min_hz) / config.grid_step_hz + kGridEps));
    i_hi = std::min(i_hi, curves[0].values.size() - 1);
  }

  result.frames.resize(n_frames);
  for (std::size_t i = 0; i < n_frames; ++i) {
    const auto& c = curves[i];
    std::size_t best = i_lo;
    for (std::size_t j = i_lo + 1; j <= i_hi; ++j) {
      if (c.values[j] > c.values[best]) best = j;
    }
    PitchFrame& out = result.frames[i];
    out.time_s = plan.center_time_s(i);
    out.f0_hz = c.frequencies_hz[best];
    out.srh_score = c.values[best];
    out.voiced = c.values[best] > theta;
  }

  if (surface != nullptr) {
    surface->times_s.resize(n_frames);
    for (std::size_t i = 0; i < n_frames; ++i) {
      surface->times_s[i] = plan.center_time_s(i);
    }
    surface->frequencies_hz =
        curves.empty() ? std::vector<double>{} : curves[0].frequencies_hz;
    surface->values.clear();
    surface->values.reserve(n_frames * surface->frequencies_hz.size());
    for (const auto& c : curves) {
      surface->values.insert(surface->values.end(), c.values.begin(),
                             c.values.end());
    }
  }
  return result;
}

}  // namespace srh
