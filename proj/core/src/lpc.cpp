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

#include "srh/lpc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srh {

std::vector<double> autocorrelation(std::span<const double> frame,
                                    std::size_t max_lag) {
  if (max_lag >= frame.size()) {
    throw std::domain_error("autocorrelation lag must be below frame length");
  }
  std::vector<double> r(max_lag + 1, 0.0);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double acc = 0.0;
    for (std::size_t n = 0; n + k < frame.size(); ++n) {
      acc += frame[n] * frame[n + k];
    }
    r[k] = acc;
  }
  return r;
}

std::optional<LpcModel> levinson_durbin(std::span<const double> r, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (r.size() < static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("need order+1 autocorrelation lags");
  }
  if (!(r[0] > 0.0)) return std::nullopt;

  std::vector<double> a(static_cast<std::size_t>(order), 0.0);
  std::vector<double> prev(a.size(), 0.0);
  double error = r[0];
  for (int m = 1; m <= order; ++m) {
    double acc = r[m];
    for (int i = 1; i < m; ++i) acc -= a[i - 1] * r[m - i];
    const double k = acc / error;
    if (!std::isfinite(k) || std::abs(k) >= 1.0) return std::nullopt;
    std::copy(a.begin(), a.begin() + (m - 1), prev.begin());
    for (int i = 1; i < m; ++i) a[i - 1] = prev[i - 1] - k * prev[m - 1 - i];
    a[m - 1] = k;
    error *= 1.0 - k * k;
    if (!(error > 0.0) || !std::isfinite(error)) return std::nullopt;
  }

  LpcModel model;
  model.order = order;
  model.coefficients = std::move(a);
  model.prediction_error_power = error;
  return model;
}

ResidualSignal inverse_filter(const AudioSignal& signal, int lpc_order,
                              double analysis_frame_ms,
                              double analysis_hop_ms) {
  validate_signal(signal);
  if (lpc_order < 1) throw std::invalid_argument("order must be >= 1");
  const auto& x = signal.samples;
  const auto order = static_cast<std::size_t>(lpc_order);

  // One coefficient set per analysis frame; an empty set is a passthrough
  // (silent or degenerate frame).
  std::vector<std::vector<double>> coeffs;
  double center0 = 0.0;  // first frame center, in samples
  double hop = 1.0;
  FrameSpec spec;
  spec.frame_length_ms = analysis_frame_ms;
  spec.hop_ms = analysis_hop_ms;

  const std::size_t frame_len = static_cast<std::size_t>(
      std::llround(analysis_frame_ms * signal.sample_rate / 1000.0));
  std::vector<double> frame;
  if (x.size() >= frame_len && frame_len > 0) {
    FramePlan plan(x.size(), signal.sample_rate, spec);
    center0 = static_cast<double>(plan.frame_length()) / 2.0;
    hop = static_cast<double>(plan.hop());
    coeffs.resize(plan.count());
    for (std::size_t i = 0; i < plan.count(); ++i) {
      plan.extract(x, i, frame);
      if (frame.size() <= order) continue;
      auto model = levinson_durbin(autocorrelation(frame, order), lpc_order);
      if (model) coeffs[i] = std::move(model->coefficients);
    }
  } else if (!x.empty()) {
    // Shorter than one analysis frame: estimate a single model on the
    // whole signal.
    coeffs.emplace_back();
    center0 = static_cast<double>(x.size()) / 2.0;
    const auto window = make_window(WindowKind::kHanning, x.size());
    frame.resize(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) frame[n] = x[n] * window[n];
    if (frame.size() > order) {
      auto model = levinson_durbin(autocorrelation(frame, order), lpc_order);
      if (model) coeffs[0] = std::move(model->coefficients);
    }
  }

  ResidualSignal out;
  out.sample_rate = signal.sample_rate;
  out.samples.resize(x.size());
  const std::size_t count = coeffs.size();
  for (std::size_t t = 0; t < x.size(); ++t) {
    const auto nearest = std::llround((static_cast<double>(t) - center0) / hop);
    const std::size_t i =
        static_cast<std::size_t>(std::clamp<long long>(
            nearest, 0, static_cast<long long>(count) - 1));
    const auto& a = coeffs[i];
    double pred = 0.0;
    for (std::size_t k = 1; k <= a.size() && k <= t; ++k) {
      pred += a[k - 1] * x[t - k];
    }
    out.samples[t] = x[t] - pred;
  }
  return out;
}

}  // namespace srh
