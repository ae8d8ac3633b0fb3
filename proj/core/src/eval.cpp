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

#include "srh/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srh {

Alignment align(const PitchTrack& track, const GroundTruthTrack& truth,
                UncertainPolicy policy) {
  if (track.frames.empty() || truth.frames.empty()) {
    throw std::runtime_error("cannot align empty tracks");
  }
  const double est_hop =
      track.frames.size() > 1
          ? track.frames[1].time_s - track.frames[0].time_s
          : track.config_used.hop_ms / 1000.0;
  const double tol = est_hop / 2.0 + 1e-9;

  Alignment out;
  out.pairs.reserve(truth.frames.size());
  for (const GroundTruthFrame& ref : truth.frames) {
    if (ref.uncertain && policy == UncertainPolicy::kExclude) {
      ++out.excluded_uncertain;
      continue;
    }
    // Estimate frame centers are sorted; nearest is one of the two
    // neighbors of the insertion point.
    const auto it = std::lower_bound(
        track.frames.begin(), track.frames.end(), ref.time_s,
        [](const PitchFrame& f, double t) { return f.time_s < t; });
    const PitchFrame* best = nullptr;
    if (it != track.frames.end()) best = &*it;
    if (it != track.frames.begin()) {
      const PitchFrame* prev = &*(it - 1);
      if (best == nullptr ||
          ref.time_s - prev->time_s < best->time_s - ref.time_s) {
        best = prev;
      }
    }
    if (best == nullptr || std::abs(best->time_s - ref.time_s) > tol) {
      ++out.dropped;
      continue;
    }
    AlignedPair pair;
    pair.time_s = ref.time_s;
    pair.ref_f0_hz = ref.uncertain ? 0.0 : ref.f0_hz;
    pair.ref_voiced = !ref.uncertain && ref.f0_hz > 0.0;
    pair.est_f0_hz = best->f0_hz;
    pair.est_voiced = best->voiced;
    out.pairs.push_back(pair);
  }
  if (out.pairs.empty()) {
    throw std::runtime_error("tracks do not overlap in time");
  }
  return out;
}

MetricCounts MetricCounts::from_pairs(std::span<const AlignedPair> pairs) {
  MetricCounts c;
  for (const AlignedPair& p : pairs) {
    ++c.n_frames;
    if (p.ref_voiced != p.est_voiced) ++c.n_voicing_errors;
    if (p.ref_voiced && p.est_voiced) {
      ++c.n_both_voiced;
      const double rel = (p.est_f0_hz - p.ref_f0_hz) / p.ref_f0_hz;
      if (std::abs(rel) > kGrossErrorThreshold) {
        ++c.n_gross_errors;
      } else {
        ++c.n_fine;
        const double pct = 100.0 * rel;
        c.fine_err_sum_pct += pct;
        c.fine_err_sum_sq_pct += pct * pct;
      }
    }
  }
  return c;
}

MetricCounts& MetricCounts::operator+=(const MetricCounts& other) {
  n_frames += other.n_frames;
  n_voicing_errors += other.n_voicing_errors;
  n_both_voiced += other.n_both_voiced;
  n_gross_errors += other.n_gross_errors;
  n_fine += other.n_fine;
  fine_err_sum_pct += other.fine_err_sum_pct;
  fine_err_sum_sq_pct += other.fine_err_sum_sq_pct;
  return *this;
}

EvalReport EvalReport::from_counts(const MetricCounts& counts) {
  EvalReport r;
  r.n_frames = counts.n_frames;
  r.n_voicing_errors = counts.n_voicing_errors;
  r.n_both_voiced = counts.n_both_voiced;
  r.n_gross_errors = counts.n_gross_errors;
  if (counts.n_frames > 0) {
    const auto n = static_cast<double>(counts.n_frames);
    r.vde_pct = 100.0 * static_cast<double>(counts.n_voicing_errors) / n;
    r.ffe_pct = 100.0 *
                static_cast<double>(counts.n_voicing_errors +
                                    counts.n_gross_errors) /
                n;
  }
  if (counts.n_both_voiced > 0) {
    r.gpe_pct = 100.0 * static_cast<double>(counts.n_gross_errors) /
                static_cast<double>(counts.n_both_voiced);
  }
  if (counts.n_fine >= 2) {
    const auto n = static_cast<double>(counts.n_fine);
    const double mean = counts.fine_err_sum_pct / n;
    const double var =
        std::max(0.0, counts.fine_err_sum_sq_pct / n - mean * mean);
    r.fpe_pct = std::sqrt(var);
  }
  return r;
}

double vde(std::span<const AlignedPair> pairs) {
  return EvalReport::from_counts(MetricCounts::from_pairs(pairs)).vde_pct;
}

double gpe(std::span<const AlignedPair> pairs) {
  return EvalReport::from_counts(MetricCounts::from_pairs(pairs)).gpe_pct;
}

std::optional<double> fpe(std::span<const AlignedPair> pairs) {
  return EvalReport::from_counts(MetricCounts::from_pairs(pairs)).fpe_pct;
}

double ffe(std::span<const AlignedPair> pairs) {
  return EvalReport::from_counts(MetricCounts::from_pairs(pairs)).ffe_pct;
}

EvalReport evaluate(std::span<const AlignedPair> pairs) {
  return EvalReport::from_counts(MetricCounts::from_pairs(pairs));
}

double rms(std::span<const double> samples) {
  if (samples.empty()) return 0.0;
  double sum_sq = 0.0;
  for (double s : samples) sum_sq += s * s;
  return std::sqrt(sum_sq / static_cast<double>(samples.size()));
}

AudioSignal mix_noise(const AudioSignal& speech, const NoiseSpec& spec) {
  if (speech.sample_rate != spec.noise.sample_rate) {
    throw std::runtime_error("speech and noise sample rates differ");
  }
  if (speech.samples.empty() || spec.noise.samples.empty()) {
    throw std::runtime_error("cannot mix an empty signal");
  }

  // The gain is set against the noise segment that actually gets added,
  // tiled from the offset and cut to the speech length.
  const std::size_t n = speech.samples.size();
  const std::size_t noise_len = spec.noise.samples.size();
  std::vector<double> segment(n);
  for (std::size_t t = 0; t < n; ++t) {
    segment[t] = spec.noise.samples[(spec.noise_offset + t) % noise_len];
  }

  const double speech_rms = rms(speech.samples);
  const double noise_rms = rms(segment);
  if (!(speech_rms > 0.0)) throw std::runtime_error("speech is silent");
  if (!(noise_rms > 0.0)) throw std::runtime_error("noise segment is silent");
  const double gain =
      speech_rms / noise_rms * std::pow(10.0, -spec.snr_db / 20.0);

  AudioSignal out;
  out.sample_rate = speech.sample_rate;
  out.samples.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    out.samples[t] = speech.samples[t] + gain * segment[t];
  }
  return out;
}

}  // namespace srh
