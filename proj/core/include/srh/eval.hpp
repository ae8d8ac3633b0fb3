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
#include "srh/tracker.hpp"

namespace srh {

// Relative f0 error above which a both-voiced frame counts as gross.
// Strictly greater-than; exactly 20% is still a fine error.
inline constexpr double kGrossErrorThreshold = 0.20;

struct GroundTruthFrame {
  double time_s = 0.0;
  double f0_hz = 0.0;      // 0 means unvoiced
  bool uncertain = false;  // flagged (negative) marker in the source file
};

struct GroundTruthTrack {
  std::vector<GroundTruthFrame> frames;
  double hop_s = 0.0;
};

// What to do with truth frames flagged uncertain: score them as unvoiced,
// or drop them from scoring entirely.
enum class UncertainPolicy { kAsUnvoiced, kExclude };

struct AlignedPair {
  double time_s = 0.0;  // truth frame time
  double ref_f0_hz = 0.0;
  bool ref_voiced = false;
  double est_f0_hz = 0.0;
  bool est_voiced = false;
};

struct Alignment {
  std::vector<AlignedPair> pairs;
  std::size_t dropped = 0;  // truth frames with no estimate within half a hop
  std::size_t excluded_uncertain = 0;
};

// Pairs each truth frame with the estimate frame whose center time is
// nearest, within half an estimate hop. Throws std::runtime_error when the
// tracks do not overlap (zero pairs).
Alignment align(const PitchTrack& track, const GroundTruthTrack& truth,
                UncertainPolicy policy = UncertainPolicy::kAsUnvoiced);

// Raw error counts; pool files by summing before converting to a report.
struct MetricCounts {
  std::size_t n_frames = 0;
  std::size_t n_voicing_errors = 0;
  std::size_t n_both_voiced = 0;
  std::size_t n_gross_errors = 0;
  std::size_t n_fine = 0;        // both-voiced, |relative error| <= 20%
  double fine_err_sum_pct = 0.0;  // signed errors, percent
  double fine_err_sum_sq_pct = 0.0;

  static MetricCounts from_pairs(std::span<const AlignedPair> pairs);
  MetricCounts& operator+=(const MetricCounts& other);
};

struct EvalReport {
  double vde_pct = 0.0;
  double gpe_pct = 0.0;
  std::optional<double> fpe_pct;  // absent with fewer than 2 fine frames
  double ffe_pct = 0.0;
  std::size_t n_frames = 0;
  std::size_t n_voicing_errors = 0;
  std::size_t n_both_voiced = 0;
  std::size_t n_gross_errors = 0;

  static EvalReport from_counts(const MetricCounts& counts);
};

// Voicing decision error: share of frames whose voicing decision differs
// from the reference.
double vde(std::span<const AlignedPair> pairs);

// Gross pitch error: share of both-voiced frames whose relative f0 error
// exceeds 20%. 0 when no frame is both-voiced.
double gpe(std::span<const AlignedPair> pairs);

// Fine pitch error: population standard deviation (in %) of the signed
// relative errors at or below 20%. Absent with fewer than 2 such frames.
std::optional<double> fpe(std::span<const AlignedPair> pairs);

// F0 frame error: share of frames with either a voicing or a gross error.
// The two frame sets are disjoint, so the counts add.
double ffe(std::span<const AlignedPair> pairs);

EvalReport evaluate(std::span<const AlignedPair> pairs);

struct NoiseSpec {
  AudioSignal noise;
  double snr_db = 0.0;
  std::size_t noise_offset = 0;  // start sample for cyclic tiling
};

// speech + g*noise with g = RMS(speech)/RMS(noise) * 10^(-snr_db/20), RMS
// taken over the full speech extent (the noise is tiled cyclically from
// noise_offset and truncated to the speech length first). Throws
// std::runtime_error on a sample-rate mismatch or a silent input.
AudioSignal mix_noise(const AudioSignal& speech, const NoiseSpec& spec);

double rms(std::span<const double> samples);

}  // namespace srh
