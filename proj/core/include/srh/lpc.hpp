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
#include <span>
#include <vector>

#include "srh/audio.hpp"

namespace srh {

// All-pole model of one analysis frame, predictor convention:
// s_hat[n] = sum_{k=1..order} coefficients[k-1] * s[n-k].
struct LpcModel {
  int order = 0;
  std::vector<double> coefficients;
  double prediction_error_power = 0.0;
};

// Residual e(t) of the whitening filter; same shape as the input signal.
using ResidualSignal = AudioSignal;

// Biased, unnormalized autocorrelation r[k] = sum_n x[n]*x[n+k] for
// k = 0..max_lag. Throws std::domain_error when max_lag >= frame length.
std::vector<double> autocorrelation(std::span<const double> frame,
                                    std::size_t max_lag);

// Levinson-Durbin recursion on the Toeplitz normal equations. Returns
// nullopt for a silent frame (r[0] <= 0) or a numerically degenerate
// recursion (|reflection| >= 1, non-positive error power); callers
// substitute zero coefficients, i.e. a passthrough filter.
std::optional<LpcModel> levinson_durbin(std::span<const double> r, int order);

// Whitens the signal: LPC models are estimated on Hann-windowed analysis
// frames and each sample is inverse-filtered with the coefficients of the
// frame whose center is nearest. Output length equals input length; the
// first lpc_order samples see zero history. Silent or degenerate frames
// pass through unchanged.
ResidualSignal inverse_filter(const AudioSignal& signal, int lpc_order,
                              double analysis_frame_ms = 32.0,
                              double analysis_hop_ms = 10.0);

}  // namespace srh
