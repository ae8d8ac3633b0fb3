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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "srh/audio.hpp"
#include "srh/fft.hpp"
#include "srh/spectrum.hpp"

namespace {

double spectrum_error(const std::vector<double>& got,
                      const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    diff = std::max(diff, std::abs(got[i] - want[i]));
    scale = std::max(scale, std::abs(want[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace

TEST_SUITE_BEGIN("dsp");

TEST_CASE("hanning window uses the periodic definition") {
  const auto w = srh::make_window(srh::WindowKind::kHanning, 4);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w[3] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("rectangular window is the identity") {
  srh::AudioSignal ones;
  ones.sample_rate = 16000;
  ones.samples.assign(64, 1.0);
  srh::FrameSpec spec;
  spec.frame_length_ms = 0.25;  // 4 samples at 16 kHz
  spec.hop_ms = 0.25;
  spec.window = srh::WindowKind::kRectangular;
  const auto frames = srh::frame_signal(ones, spec);
  REQUIRE(!frames.empty());
  for (double v : frames[0].samples) CHECK(v == 1.0);
}

TEST_CASE("hanning frame of ones equals the window") {
  srh::AudioSignal ones;
  ones.sample_rate = 16000;
  ones.samples.assign(4, 1.0);
  srh::FrameSpec spec;
  spec.frame_length_ms = 0.25;
  spec.hop_ms = 0.25;
  const auto frames = srh::frame_signal(ones, spec);
  REQUIRE(frames.size() == 1);
  const auto want = srh::make_window(srh::WindowKind::kHanning, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(frames[0].samples[i] == doctest::Approx(want[i]).epsilon(1e-12));
  }
}

TEST_CASE("one second at 16 kHz yields 91 default frames") {
  srh::AudioSignal signal;
  signal.sample_rate = 16000;
  signal.samples.assign(16000, 0.25);
  const auto frames = srh::frame_signal(signal, srh::FrameSpec{});
  CHECK(frames.size() == 91);
  for (const auto& f : frames) CHECK(f.samples.size() == 1600);
  CHECK(frames[0].center_time_s == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(frames[1].center_time_s == doctest::Approx(0.06).epsilon(1e-12));
}

TEST_CASE("frame count formula holds for random layouts") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<std::size_t> frame_dist(1, 400);
  std::uniform_int_distribution<std::size_t> extra_dist(0, 5000);
  for (int i = 0; i < 200; ++i) {
    const std::size_t frame = frame_dist(rng);
    const std::size_t hop =
        std::uniform_int_distribution<std::size_t>(1, frame)(rng);
    const std::size_t len = frame + extra_dist(rng);
    // 1 ms = 1 sample at 1 kHz keeps the ms spec exact.
    srh::FrameSpec spec;
    spec.frame_length_ms = static_cast<double>(frame);
    spec.hop_ms = static_cast<double>(hop);
    const srh::FramePlan plan(len, 1000, spec);
    CHECK(plan.count() == (len - frame) / hop + 1);
  }
}

TEST_CASE("framing rejects bad inputs") {
  srh::AudioSignal tiny;
  tiny.sample_rate = 16000;
  tiny.samples.assign(100, 0.0);
  CHECK_THROWS_AS(srh::frame_signal(tiny, srh::FrameSpec{}),
                  std::invalid_argument);

  srh::FrameSpec hop_too_big;
  hop_too_big.frame_length_ms = 10.0;
  hop_too_big.hop_ms = 20.0;
  CHECK_THROWS_AS(srh::FramePlan(16000, 16000, hop_too_big),
                  std::invalid_argument);

  srh::AudioSignal nan_signal;
  nan_signal.sample_rate = 16000;
  nan_signal.samples.assign(16000, 0.0);
  nan_signal.samples[123] = std::nan("");
  CHECK_THROWS_AS(srh::validate_signal(nan_signal), std::invalid_argument);

  srh::AudioSignal low_rate;
  low_rate.sample_rate = 4000;
  low_rate.samples.assign(4000, 0.0);
  CHECK_THROWS_AS(srh::validate_signal(low_rate), std::invalid_argument);
}

TEST_CASE("fft helpers") {
  CHECK(srh::fft::next_power_of_two(1) == 1);
  CHECK(srh::fft::next_power_of_two(16000) == 16384);
  CHECK(srh::fft::next_power_of_two(16384) == 16384);
  CHECK(srh::fft::is_power_of_two(1024));
  CHECK(!srh::fft::is_power_of_two(1000));

  std::vector<std::complex<double>> odd(3);
  CHECK_THROWS_AS(srh::fft::transform(odd), std::invalid_argument);
}

TEST_CASE("amplitude spectrum matches the direct DFT oracle") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> len_dist(1, 512);
  for (int i = 0; i < 120; ++i) {
    const std::size_t len = len_dist(rng);
    std::vector<double> frame(len);
    for (double& v : frame) v = amp(rng);
    const std::size_t n = srh::fft::next_power_of_two(len);
    const int fs = 16000;
    const auto spectrum = srh::amplitude_spectrum(
        frame, fs, static_cast<double>(fs) / static_cast<double>(n));
    const auto want = oracle::dft_magnitudes(frame, n);
    CHECK(spectrum.magnitudes.size() == n / 2 + 1);
    CHECK(spectrum.bin_hz ==
          doctest::Approx(static_cast<double>(fs) / n).epsilon(1e-12));
    CHECK(spectrum_error(spectrum.magnitudes, want) < 1e-9);
  }
}

TEST_CASE("bin-aligned cosine concentrates into one bin") {
  const int fs = 16000;
  const std::size_t n = 512;
  const std::size_t bin = 37;
  std::vector<double> frame(n);
  for (std::size_t t = 0; t < n; ++t) {
    frame[t] = std::cos(2.0 * std::numbers::pi * static_cast<double>(bin) *
                        static_cast<double>(t) / static_cast<double>(n));
  }
  const auto spectrum = srh::amplitude_spectrum(
      frame, fs, static_cast<double>(fs) / static_cast<double>(n));
  const double peak = spectrum.magnitudes[bin];
  CHECK(peak > 100.0 * spectrum.magnitudes[bin - 1]);
  CHECK(peak > 100.0 * spectrum.magnitudes[bin + 1]);
}

TEST_CASE("all-zero frame gives an all-zero spectrum") {
  std::vector<double> frame(256, 0.0);
  const auto spectrum = srh::amplitude_spectrum(frame, 16000, 62.5);
  for (double m : spectrum.magnitudes) CHECK(m == 0.0);
}

TEST_CASE("parseval identity through the spectrum path") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 256;
    std::vector<double> frame(n);
    double time_energy = 0.0;
    for (double& v : frame) {
      v = amp(rng);
      time_energy += v * v;
    }
    const auto spectrum = srh::amplitude_spectrum(frame, 16000, 62.5);
    REQUIRE(spectrum.magnitudes.size() == n / 2 + 1);
    // Two-sided accounting: interior bins appear twice.
    double freq_energy = spectrum.magnitudes[0] * spectrum.magnitudes[0] +
                         spectrum.magnitudes[n / 2] * spectrum.magnitudes[n / 2];
    for (std::size_t k = 1; k < n / 2; ++k) {
      freq_energy += 2.0 * spectrum.magnitudes[k] * spectrum.magnitudes[k];
    }
    freq_energy /= static_cast<double>(n);
    CHECK(freq_energy ==
          doctest::Approx(time_energy).epsilon(1e-6));
  }
}

TEST_CASE("normalize_energy scales to unit norm") {
  srh::AmplitudeSpectrum spectrum;
  spectrum.magnitudes = {3.0, 4.0};
  spectrum.bin_hz = 1.0;
  spectrum.nyquist_hz = 1.0;
  const auto normalized = srh::normalize_energy(spectrum);
  REQUIRE(normalized.has_value());
  CHECK(normalized->magnitudes[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(normalized->magnitudes[1] == doctest::Approx(0.8).epsilon(1e-12));

  // Idempotence: renormalizing changes nothing.
  auto twice = srh::normalize_energy(*normalized);
  REQUIRE(twice.has_value());
  CHECK(twice->magnitudes[0] ==
        doctest::Approx(normalized->magnitudes[0]).epsilon(1e-12));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> amp(0.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    srh::AmplitudeSpectrum random;
    random.magnitudes.resize(100);
    for (double& m : random.magnitudes) m = amp(rng);
    REQUIRE(srh::normalize_energy_in_place(random));
    double norm = 0.0;
    for (double m : random.magnitudes) norm += m * m;
    CHECK(std::abs(std::sqrt(norm) - 1.0) < 1e-12);
  }
}

TEST_CASE("normalize_energy flags all-zero spectra") {
  srh::AmplitudeSpectrum zero;
  zero.magnitudes.assign(10, 0.0);
  CHECK(!srh::normalize_energy(zero).has_value());
  CHECK(!srh::normalize_energy_in_place(zero));
  for (double m : zero.magnitudes) CHECK(m == 0.0);
}

TEST_CASE("spectrum_at interpolates between bins") {
  srh::AmplitudeSpectrum spectrum;
  spectrum.magnitudes = {1.0, 2.0, 4.0, 0.5};
  spectrum.bin_hz = 10.0;
  spectrum.nyquist_hz = 30.0;

  CHECK(srh::spectrum_at(spectrum, 0.0) == 1.0);
  CHECK(srh::spectrum_at(spectrum, 20.0) == 4.0);
  CHECK(srh::spectrum_at(spectrum, 15.0) == doctest::Approx(3.0));
  CHECK(srh::spectrum_at(spectrum, 31.0) == 0.0);
  CHECK_THROWS_AS(srh::spectrum_at(spectrum, -1.0), std::domain_error);

  // Interpolation stays within the neighboring magnitudes.
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> freq(0.0, 30.0);
  for (int i = 0; i < 200; ++i) {
    const double f = freq(rng);
    const double v = srh::spectrum_at(spectrum, f);
    const auto lo = static_cast<std::size_t>(f / spectrum.bin_hz);
    const std::size_t hi = std::min<std::size_t>(lo + 1, 3);
    CHECK(v >= std::min(spectrum.magnitudes[lo], spectrum.magnitudes[hi]) -
                   1e-12);
    CHECK(v <= std::max(spectrum.magnitudes[lo], spectrum.magnitudes[hi]) +
                   1e-12);
  }
}

TEST_SUITE_END();
