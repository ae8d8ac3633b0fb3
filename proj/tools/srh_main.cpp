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

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "srh/batch.hpp"
#include "srh/error.hpp"
#include "srh/eval.hpp"
#include "srh/track_io.hpp"
#include "srh/tracker.hpp"
#include "srh/wav.hpp"

namespace {

struct TrackArgs {
  std::string wav;
  std::string out;
  std::string source = "residual";
  double theta = -1.0;  // <0 = source default
  srh::TrackerConfig config;
};

struct EvalArgs {
  std::string track_csv;
  std::string truth_txt;
  std::string uncertain = "unvoiced";
};

struct MixArgs {
  std::string speech;
  std::string noise;
  std::string out;
  double snr_db = 0.0;
  std::size_t noise_offset = 0;
  bool int16 = false;
};

struct BatchArgs {
  std::string manifest;
  int jobs = 0;  // 0 = manifest value
};

int run_track(const TrackArgs& args) {
  srh::TrackerConfig config = args.config;
  config.source = args.source == "speech" ? srh::SpectrumSource::kSpeech
                                          : srh::SpectrumSource::kResidual;
  if (args.theta >= 0.0) config.theta = args.theta;

  const srh::AudioSignal signal = srh::read_wav(args.wav);
  const srh::PitchTrack result = srh::track(signal, config);
  if (result.f0_mean_hz == 0.0) {
    std::cerr << "srh: no speech detected in " << args.wav
              << " (all frames unvoiced)\n";
  }
  if (args.out.empty()) {
    srh::write_track(result, std::cout);
  } else {
    srh::write_track(result, std::filesystem::path(args.out));
  }
  return 0;
}

int run_eval(const EvalArgs& args) {
  const srh::PitchTrack track = srh::read_track(args.track_csv);
  const srh::GroundTruthTrack truth = srh::read_truth(args.truth_txt);
  const auto policy = args.uncertain == "exclude"
                          ? srh::UncertainPolicy::kExclude
                          : srh::UncertainPolicy::kAsUnvoiced;
  const srh::Alignment alignment = srh::align(track, truth, policy);
  const srh::EvalReport report = srh::evaluate(alignment.pairs);

  std::printf("frames %zu\n", report.n_frames);
  std::printf("vde %.4f\n", report.vde_pct);
  std::printf("gpe %.4f\n", report.gpe_pct);
  if (report.fpe_pct) {
    std::printf("fpe %.4f\n", *report.fpe_pct);
  } else {
    std::printf("fpe n/a\n");
  }
  std::printf("ffe %.4f\n", report.ffe_pct);
  if (alignment.dropped > 0 || alignment.excluded_uncertain > 0) {
    std::fprintf(stderr,
                 "srh: %zu reference frame(s) unmatched, %zu excluded as "
                 "uncertain\n",
                 alignment.dropped, alignment.excluded_uncertain);
  }
  return 0;
}

int run_mix(const MixArgs& args) {
  srh::NoiseSpec spec;
  spec.noise = srh::read_wav(args.noise);
  spec.snr_db = args.snr_db;
  spec.noise_offset = args.noise_offset;
  const srh::AudioSignal speech = srh::read_wav(args.speech);
  const srh::AudioSignal mixed = srh::mix_noise(speech, spec);
  srh::write_wav(mixed, args.out,
                 args.int16 ? srh::WavSampleFormat::kInt16
                            : srh::WavSampleFormat::kFloat32);
  return 0;
}

int run_batch_cmd(const BatchArgs& args) {
  srh::RunManifest manifest = srh::read_manifest(args.manifest);
  if (args.jobs > 0) manifest.jobs = args.jobs;
  const srh::BatchResult result = srh::run_batch(manifest);
  for (const auto& f : result.files) {
    if (!f.ok) {
      std::cerr << "srh: " << f.audio.string() << ": " << f.error << '\n';
    }
  }
  std::cerr << "srh: " << result.files.size() - result.failures << "/"
            << result.files.size() << " file(s) processed into "
            << manifest.out_dir.string() << '\n';
  return result.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SRH pitch tracker: residual-harmonic f0 estimation and "
               "voicing detection"};
  app.require_subcommand(1);

  TrackArgs track_args;
  auto* track_cmd =
      app.add_subcommand("track", "Estimate pitch and voicing from a WAV");
  track_cmd->add_option("wav", track_args.wav, "input WAV file")->required();
  track_cmd->add_option("--out", track_args.out,
                        "output CSV path (default: stdout)");
  track_cmd->add_option("--source", track_args.source,
                        "spectrum source: residual or speech")
      ->check(CLI::IsMember({"residual", "speech"}));
  track_cmd->add_option("--theta", track_args.theta,
                        "voicing threshold (default 0.07 residual / "
                        "0.18 speech)");
  track_cmd->add_option("--f0-min", track_args.config.f0_min_hz,
                        "lowest f0 candidate, Hz");
  track_cmd->add_option("--f0-max", track_args.config.f0_max_hz,
                        "highest f0 candidate, Hz");
  track_cmd->add_option("--nharm", track_args.config.n_harm,
                        "number of harmonics in the score");
  track_cmd->add_option("--lpc-order", track_args.config.lpc_order,
                        "LPC order for the residual");
  track_cmd->add_option("--frame-ms", track_args.config.frame_length_ms,
                        "analysis frame length, ms");
  track_cmd->add_option("--hop-ms", track_args.config.hop_ms,
                        "frame hop, ms");

  EvalArgs eval_args;
  auto* eval_cmd =
      app.add_subcommand("eval", "Score a track CSV against a reference");
  eval_cmd->add_option("track", eval_args.track_csv, "track CSV file")
      ->required();
  eval_cmd->add_option("truth", eval_args.truth_txt,
                       "two-column reference (time_s f0_hz)")
      ->required();
  eval_cmd->add_option("--uncertain", eval_args.uncertain,
                       "uncertain reference frames: unvoiced or exclude")
      ->check(CLI::IsMember({"unvoiced", "exclude"}));

  MixArgs mix_args;
  auto* mix_cmd =
      app.add_subcommand("mix", "Add noise to speech at a target SNR");
  mix_cmd->add_option("speech", mix_args.speech, "speech WAV")->required();
  mix_cmd->add_option("noise", mix_args.noise, "noise WAV")->required();
  mix_cmd->add_option("--snr-db", mix_args.snr_db, "target SNR in dB")
      ->required();
  mix_cmd->add_option("--out", mix_args.out, "output WAV path")->required();
  mix_cmd->add_option("--noise-offset", mix_args.noise_offset,
                      "noise start sample for cyclic tiling");
  mix_cmd->add_flag("--int16", mix_args.int16,
                    "write 16-bit PCM instead of 32-bit float");

  BatchArgs batch_args;
  auto* batch_cmd =
      app.add_subcommand("batch", "Run a manifest of files end to end");
  batch_cmd->add_option("manifest", batch_args.manifest,
                        "key = value manifest file")
      ->required();
  batch_cmd->add_option("--jobs", batch_args.jobs,
                        "parallel workers (overrides the manifest)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (track_cmd->parsed()) return run_track(track_args);
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (mix_cmd->parsed()) return run_mix(mix_args);
    if (batch_cmd->parsed()) return run_batch_cmd(batch_args);
  } catch (const std::exception& e) {
    std::cerr << "srh: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
