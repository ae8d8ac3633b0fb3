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

#include "srh/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "srh/error.hpp"
#include "srh/track_io.hpp"
#include "srh/wav.hpp"

namespace srh {

namespace {

[[noreturn]] void bad_line(const std::filesystem::path& path, std::size_t line,
                           const std::string& what) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

double to_double(const std::string& v, const std::filesystem::path& path,
                 std::size_t line) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  bad_line(path, line, "expected a number, got `" + v + "`");
}

int to_int(const std::string& v, const std::filesystem::path& path,
           std::size_t line) {
  try {
    std::size_t used = 0;
    const int i = std::stoi(v, &used);
    if (used == v.size()) return i;
  } catch (const std::exception&) {
  }
  bad_line(path, line, "expected an integer, got `" + v + "`");
}

bool to_bool(const std::string& v, const std::filesystem::path& path,
             std::size_t line) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  bad_line(path, line, "expected a boolean, got `" + v + "`");
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::filesystem::path& p) {
  return p.is_absolute() ? p : base / p;
}

std::string metric_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  const std::filesystem::path base = path.parent_path();

  RunManifest m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      bad_line(path, line_no, "expected `key = value`");
    }
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value =
        trim(std::string_view(stripped).substr(eq + 1));
    if (value.empty()) bad_line(path, line_no, "empty value for " + key);

    if (key == "input") {
      std::istringstream parts(value);
      std::string audio;
      std::string truth;
      std::string extra;
      parts >> audio >> truth >> extra;
      if (!extra.empty()) {
        bad_line(path, line_no, "input takes `audio [truth]`");
      }
      ManifestInput input;
      input.audio = resolve(base, audio);
      if (!truth.empty()) input.truth = resolve(base, truth);
      m.inputs.push_back(std::move(input));
    } else if (key == "out_dir") {
      m.out_dir = resolve(base, value);
    } else if (key == "condition") {
      m.condition = value;
    } else if (key == "noise") {
      m.noise = resolve(base, value);
    } else if (key == "snr_db") {
      m.snr_db = to_double(value, path, line_no);
    } else if (key == "noise_offset") {
      const int v = to_int(value, path, line_no);
      if (v < 0) bad_line(path, line_no, "noise_offset must be >= 0");
      m.noise_offset = static_cast<std::size_t>(v);
    } else if (key == "source") {
      if (value == "residual") {
        m.tracker.source = SpectrumSource::kResidual;
      } else if (value == "speech") {
        m.tracker.source = SpectrumSource::kSpeech;
      } else {
        bad_line(path, line_no, "source must be residual or speech");
      }
    } else if (key == "theta") {
      m.tracker.theta = to_double(value, path, line_no);
    } else if (key == "f0_min") {
      m.tracker.f0_min_hz = to_double(value, path, line_no);
    } else if (key == "f0_max") {
      m.tracker.f0_max_hz = to_double(value, path, line_no);
    } else if (key == "n_harm") {
      m.tracker.n_harm = to_int(value, path, line_no);
    } else if (key == "lpc_order") {
      m.tracker.lpc_order = to_int(value, path, line_no);
    } else if (key == "frame_ms") {
      m.tracker.frame_length_ms = to_double(value, path, line_no);
    } else if (key == "hop_ms") {
      m.tracker.hop_ms = to_double(value, path, line_no);
    } else if (key == "grid_step") {
      m.tracker.grid_step_hz = to_double(value, path, line_no);
    } else if (key == "uncertain") {
      if (value == "exclude") {
        m.uncertain = UncertainPolicy::kExclude;
      } else if (value == "unvoiced") {
        m.uncertain = UncertainPolicy::kAsUnvoiced;
      } else {
        bad_line(path, line_no, "uncertain must be exclude or unvoiced");
      }
    } else if (key == "plot") {
      m.write_plot = to_bool(value, path, line_no);
    } else if (key == "srh_surface") {
      m.write_surface = to_bool(value, path, line_no);
    } else if (key == "jobs") {
      m.jobs = to_int(value, path, line_no);
      if (m.jobs < 1) bad_line(path, line_no, "jobs must be >= 1");
    } else {
      bad_line(path, line_no, "unknown key `" + key + "`");
    }
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
  if (m.inputs.empty()) {
    throw ParseError(path.string() + ": no input lines");
  }
  if (m.out_dir.empty()) {
    throw ParseError(path.string() + ": out_dir is required");
  }
  return m;
}

namespace {

// Output stems: file stem, deduplicated with a numeric suffix when two
// inputs share one.
std::vector<std::string> output_stems(const RunManifest& m) {
  std::vector<std::string> stems;
  std::map<std::string, int> seen;
  stems.reserve(m.inputs.size());
  for (const auto& input : m.inputs) {
    std::string stem = input.audio.stem().string();
    if (stem.empty()) stem = "input";
    const int n = ++seen[stem];
    if (n > 1) stem += "_" + std::to_string(n);
    stems.push_back(std::move(stem));
  }
  return stems;
}

struct FileWork {
  FileOutcome outcome;
  std::optional<MetricCounts> counts;
};

FileWork process_file(const RunManifest& m, const ManifestInput& input,
                      const std::string& stem, const AudioSignal* noise) {
  FileWork work;
  work.outcome.audio = input.audio;
  try {
    AudioSignal signal = read_wav(input.audio);
    if (noise != nullptr) {
      NoiseSpec spec;
      spec.noise = *noise;
      spec.snr_db = m.snr_db;
      spec.noise_offset = m.noise_offset;
      signal = mix_noise(signal, spec);
    }

    SrhSurface surface;
    const PitchTrack track_result =
        track(signal, m.tracker, m.write_surface ? &surface : nullptr);
    write_track(track_result, m.out_dir / (stem + ".track.csv"));
    if (m.write_surface) {
      write_srh_surface(surface, m.out_dir / (stem + ".srh.csv"));
    }

    std::optional<GroundTruthTrack> truth;
    if (!input.truth.empty()) {
      truth = read_truth(input.truth);
      const Alignment alignment = align(track_result, *truth, m.uncertain);
      work.counts = MetricCounts::from_pairs(alignment.pairs);
      work.outcome.report = EvalReport::from_counts(*work.counts);
    }
    if (m.write_plot) {
      write_plot_data(track_result, truth ? &*truth : nullptr,
                      m.out_dir / (stem + ".plot.csv"));
    }
    work.outcome.ok = true;
  } catch (const std::exception& e) {
    work.outcome.ok = false;
    work.outcome.error = e.what();
  }
  return work;
}

}  // namespace

BatchResult run_batch(const RunManifest& manifest) {
  std::filesystem::create_directories(manifest.out_dir);

  std::optional<AudioSignal> noise;
  if (!manifest.noise.empty()) noise = read_wav(manifest.noise);

  const auto stems = output_stems(manifest);
  std::vector<FileWork> work(manifest.inputs.size());

  const auto run_range = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next.fetch_add(1); i < manifest.inputs.size();
         i = next.fetch_add(1)) {
      work[i] = process_file(manifest, manifest.inputs[i], stems[i],
                             noise ? &*noise : nullptr);
    }
  };

  std::atomic<std::size_t> next{0};
  const std::size_t n_threads = std::min<std::size_t>(
      std::max(1, manifest.jobs), manifest.inputs.size());
  if (n_threads <= 1) {
    run_range(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] { run_range(next); });
    }
    for (auto& t : pool) t.join();
  }

  BatchResult result;
  result.files.reserve(work.size());
  MetricCounts pooled;
  bool any_eval = false;
  for (auto& w : work) {
    if (!w.outcome.ok) ++result.failures;
    if (w.counts) {
      pooled += *w.counts;
      any_eval = true;
    }
    result.files.push_back(std::move(w.outcome));
  }
  if (any_eval) result.pooled = EvalReport::from_counts(pooled);

  // metrics.csv lists every processed file; files without a reference keep
  // their metric cells empty. The ALL row pools counts across files.
  {
    const auto metrics_path = manifest.out_dir / "metrics.csv";
    std::ofstream out(metrics_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open " + metrics_path.string() + " for writing");
    }
    out << "file,condition,vde,gpe,fpe,ffe\n";
    const auto row = [&](const std::string& name, const EvalReport* r) {
      out << name << ',' << manifest.condition << ',';
      if (r != nullptr) {
        out << metric_cell(r->vde_pct) << ',' << metric_cell(r->gpe_pct)
            << ',';
        if (r->fpe_pct) out << metric_cell(*r->fpe_pct);
        out << ',' << metric_cell(r->ffe_pct);
      } else {
        out << ",,,";
      }
      out << '\n';
    };
    for (const auto& f : result.files) {
      if (f.ok) row(f.audio.filename().string(), f.report ? &*f.report
                                                          : nullptr);
    }
    row("ALL", result.pooled ? &*result.pooled : nullptr);
    out.flush();
    if (!out) throw IoError("write failure on " + metrics_path.string());
  }

  // run.log is the only output with wall-clock content.
  {
    std::ofstream log(manifest.out_dir / "run.log",
                      std::ios::binary | std::ios::trunc);
    const auto now = std::chrono::system_clock::now();
    const auto time = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%S",
                  std::localtime(&time));
    for (std::size_t i = 0; i < result.files.size(); ++i) {
      const auto& f = result.files[i];
      log << stamp << ' ' << (f.ok ? "ok   " : "error") << ' '
          << f.audio.string();
      if (!f.ok) log << " : " << f.error;
      log << '\n';
    }
    log << stamp << " done, " << result.failures << " failure(s)\n";
  }
  return result;
}

}  // namespace srh
