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

namespace srh {

// One-sided magnitude spectrum. Bin i lives at frequency i * bin_hz; the
// last stored bin is at or below nyquist_hz.
struct AmplitudeSpectrum {
  std::vector<double> magnitudes;
  double bin_hz = 0.0;
  double nyquist_hz = 0.0;
};

// Magnitude DFT of the frame, zero-padded to the smallest power-of-two
// length whose bin spacing is <= target_bin_hz (and that holds the frame).
// Output covers bins 0..Nyquist inclusive.
AmplitudeSpectrum amplitude_spectrum(std::span<const double> frame,
                                     int sample_rate, double target_bin_hz);

// Scales magnitudes to unit L2 norm. Returns false (leaving the input
// untouched) when the spectrum is all-zero; the caller treats such frames
// as unvoiced with a zero score.
bool normalize_energy_in_place(AmplitudeSpectrum& spectrum);

// Copying variant; nullopt for an all-zero spectrum.
std::optional<AmplitudeSpectrum> normalize_energy(
    const AmplitudeSpectrum& spectrum);

// Magnitude at an arbitrary frequency: linear interpolation between the two
// adjacent bins, 0 above Nyquist. Throws std::domain_error for negative f.
double spectrum_at(const AmplitudeSpectrum& spectrum, double f_hz);

}  // namespace srh
