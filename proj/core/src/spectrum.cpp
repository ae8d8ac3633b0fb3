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

#include "srh/spectrum.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "srh/fft.hpp"

namespace srh {

AmplitudeSpectrum amplitude_spectrum(std::span<const double> frame,
                                     int sample_rate, double target_bin_hz) {
  if (frame.empty()) throw std::invalid_argument("empty frame");
  if (sample_rate <= 0) throw std::invalid_argument("bad sample rate");
  if (!(target_bin_hz > 0.0)) {
    throw std::invalid_argument("target bin width must be positive");
  }

  std::size_t n = fft::next_power_of_two(frame.size());
  while (static_cast<double>(sample_rate) / static_cast<double>(n) >
         target_bin_hz) {
    if (n > (std::size_t{1} << 30)) {
      throw std::invalid_argument("target bin width too small");
    }
    n <<= 1;
  }

  std::vector<std::complex<double>> buf(n);
  for (std::size_t i = 0; i < frame.size(); ++i) buf[i] = frame[i];
  fft::transform(buf);

  AmplitudeSpectrum out;
  out.bin_hz = static_cast<double>(sample_rate) / static_cast<double>(n);
  out.nyquist_hz = sample_rate / 2.0;
  out.magnitudes.resize(n / 2 + 1);
  for (std::size_t i = 0; i <= n / 2; ++i) {
    out.magnitudes[i] = std::abs(buf[i]);
  }
  return out;
}

bool normalize_energy_in_place(AmplitudeSpectrum& spectrum) {
  double sum_sq = 0.0;
  for (double m : spectrum.magnitudes) sum_sq += m * m;
  if (!(sum_sq > 0.0)) return false;
  const double inv = 1.0 / std::sqrt(sum_sq);
  for (double& m : spectrum.magnitudes) m *= inv;
  return true;
}

std::optional<AmplitudeSpectrum> normalize_energy(
    const AmplitudeSpectrum& spectrum) {
  AmplitudeSpectrum copy = spectrum;
  if (!normalize_energy_in_place(copy)) return std::nullopt;
  return copy;
}

double spectrum_at(const AmplitudeSpectrum& spectrum, double f_hz) {
  if (f_hz < 0.0) throw std::domain_error("negative frequency");
  if (f_hz > spectrum.nyquist_hz || spectrum.magnitudes.empty()) return 0.0;
  const double pos = f_hz / spectrum.bin_hz;
  const std::size_t last = spectrum.magnitudes.size() - 1;
  const auto i0 = static_cast<std::size_t>(pos);
  if (i0 >= last) return spectrum.magnitudes[last];
  const double frac = pos - static_cast<double>(i0);
  return spectrum.magnitudes[i0] * (1.0 - frac) +
         spectrum.magnitudes[i0 + 1] * frac;
}

}  // namespace srh
