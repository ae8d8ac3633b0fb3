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

#include "srh/audio.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace srh {

void validate_signal(const AudioSignal& signal) {
  if (signal.sample_rate < 8000) {
    throw std::invalid_argument("sample rate must be at least 8000 Hz, got " +
                                std::to_string(signal.sample_rate));
  }
  for (double s : signal.samples) {
    if (!std::isfinite(s)) {
      throw std::invalid_argument("signal contains a non-finite sample");
    }
  }
}

std::vector<double> make_window(WindowKind kind, std::size_t length) {
  std::vector<double> w(length, 1.0);
  if (kind == WindowKind::kHanning && length > 0) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(length);
    for (std::size_t n = 0; n < length; ++n) {
      w[n] = 0.5 - 0.5 * std::cos(step * static_cast<double>(n));
    }
  }
  return w;
}

namespace {

std::size_t ms_to_samples(double ms, int sample_rate) {
  return static_cast<std::size_t>(std::llround(ms * sample_rate / 1000.0));
}

}  // namespace

FramePlan::FramePlan(std::size_t signal_length, int sample_rate,
                     const FrameSpec& spec)
    : sample_rate_(sample_rate) {
  if (sample_rate <= 0) {
    throw std::invalid_argument("sample rate must be positive");
  }
  if (!(spec.frame_length_ms > 0.0) || !(spec.hop_ms > 0.0)) {
    throw std::invalid_argument("frame length and hop must be positive");
  }
  if (spec.hop_ms > spec.frame_length_ms) {
    throw std::invalid_argument("hop must not exceed the frame length");
  }
  frame_length_ = ms_to_samples(spec.frame_length_ms, sample_rate);
  hop_ = ms_to_samples(spec.hop_ms, sample_rate);
  if (frame_length_ == 0 || hop_ == 0) {
    throw std::invalid_argument("frame length and hop must round to >= 1 "
                                "sample");
  }
  if (signal_length < frame_length_) {
    throw std::invalid_argument(
        "signal is shorter than one frame (" +
        std::to_string(signal_length) + " < " +
        std::to_string(frame_length_) + " samples)");
  }
  count_ = (signal_length - frame_length_) / hop_ + 1;
  window_ = make_window(spec.window, frame_length_);
}

double FramePlan::center_time_s(std::size_t i) const {
  return (static_cast<double>(i * hop_) +
          static_cast<double>(frame_length_) / 2.0) /
         sample_rate_;
}

void FramePlan::extract(std::span<const double> samples, std::size_t i,
                        std::vector<double>& out) const {
  if (i >= count_) throw std::out_of_range("frame index out of range");
  out.resize(frame_length_);
  const std::size_t start = i * hop_;
  for (std::size_t n = 0; n < frame_length_; ++n) {
    out[n] = samples[start + n] * window_[n];
  }
}

std::vector<WindowedFrame> frame_signal(const AudioSignal& signal,
                                        const FrameSpec& spec) {
  validate_signal(signal);
  FramePlan plan(signal.samples.size(), signal.sample_rate, spec);
  std::vector<WindowedFrame> frames(plan.count());
  for (std::size_t i = 0; i < plan.count(); ++i) {
    plan.extract(signal.samples, i, frames[i].samples);
    frames[i].center_time_s = plan.center_time_s(i);
  }
  return frames;
}

}  // namespace srh
