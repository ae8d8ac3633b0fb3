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
#include <span>
#include <vector>

namespace srh {

// Mono sample buffer. Samples are dimensionless amplitudes, nominally in
// [-1, 1) when they come from a PCM file.
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate = 0;  // Hz

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Throws std::invalid_argument when the sample rate is below 8 kHz (the
// harmonic sum needs bandwidth up to n_harm * f0_max) or any sample is
// NaN/Inf.
void validate_signal(const AudioSignal& signal);

enum class WindowKind { kHanning, kRectangular };

struct FrameSpec {
  double frame_length_ms = 100.0;
  double hop_ms = 10.0;
  WindowKind window = WindowKind::kHanning;
};

struct WindowedFrame {
  std::vector<double> samples;
  double center_time_s = 0.0;
};

// Periodic Hann: w[n] = 0.5 - 0.5*cos(2*pi*n/N), n = 0..N-1.
// Rectangular: all ones.
std::vector<double> make_window(WindowKind kind, std::size_t length);

// Snip-edges frame layout shared by every consumer. Frame i starts at
// sample i*hop; frame count = floor((len - frame_len)/hop) + 1; the center
// of frame i sits at (i*hop + frame_len/2) / sample_rate seconds.
//
// Throws std::invalid_argument for a malformed spec or a signal shorter
// than one frame.
class FramePlan {
 public:
  FramePlan(std::size_t signal_length, int sample_rate, const FrameSpec& spec);

  std::size_t frame_length() const { return frame_length_; }
  std::size_t hop() const { return hop_; }
  std::size_t count() const { return count_; }
  double center_time_s(std::size_t i) const;

  // Windowed copy of frame i; out is resized to frame_length().
  void extract(std::span<const double> samples, std::size_t i,
               std::vector<double>& out) const;

 private:
  std::size_t frame_length_ = 0;
  std::size_t hop_ = 0;
  std::size_t count_ = 0;
  int sample_rate_ = 0;
  std::vector<double> window_;
};

// Materializes every windowed frame together with its center time.
std::vector<WindowedFrame> frame_signal(const AudioSignal& signal,
                                        const FrameSpec& spec);

}  // namespace srh
