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

#include "srh/track_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "srh/error.hpp"

namespace srh {

namespace {

constexpr char kTrackHeader[] = "time_s,f0_hz,srh,voiced";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%#.6g", v);
  return buf;
}

[[noreturn]] void bad_line(const std::filesystem::path& path, std::size_t line,
                           const std::string& what) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_double(std::string_view field, double& out) {
  const std::string tmp(trim(field));
  if (tmp.empty()) return false;
  char* end = nullptr;
  out = std::strtod(tmp.c_str(), &end);
  return end == tmp.c_str() + tmp.size() && std::isfinite(out);
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish_out(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace

void write_track(const PitchTrack& track, std::ostream& out) {
  out << kTrackHeader << '\n';
  for (const PitchFrame& f : track.frames) {
    out << num(f.time_s) << ',' << num(f.f0_hz) << ',' << num(f.srh_score)
        << ',' << (f.voiced ? 1 : 0) << '\n';
  }
}

void write_track(const PitchTrack& track, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_track(track, out);
  finish_out(out, path);
}

PitchTrack read_track(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  PitchTrack track;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) bad_line(path, 1, "empty file");
  ++line_no;
  if (trim(line).substr(0, sizeof kTrackHeader - 1) != kTrackHeader) {
    bad_line(path, 1, "expected header `" + std::string(kTrackHeader) + "`");
  }
  while (std::getline(in, line)) {
    ++line_no;
    const auto stripped = trim(line);
    if (stripped.empty()) continue;
    const auto fields = split_csv(stripped);
    if (fields.size() < 4) bad_line(path, line_no, "expected 4 columns");
    PitchFrame f;
    double voiced = 0.0;
    if (!parse_double(fields[0], f.time_s) ||
        !parse_double(fields[1], f.f0_hz) ||
        !parse_double(fields[2], f.srh_score) ||
        !parse_double(fields[3], voiced) ||
        (voiced != 0.0 && voiced != 1.0)) {
      bad_line(path, line_no, "malformed row");
    }
    f.voiced = voiced != 0.0;
    track.frames.push_back(f);
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
  return track;
}

GroundTruthTrack read_truth(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  GroundTruthTrack truth;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    const auto stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    std::istringstream fields{std::string(stripped)};
    double time = 0.0;
    double f0 = 0.0;
    if (!(fields >> time >> f0) || !std::isfinite(time) ||
        !std::isfinite(f0)) {
      bad_line(path, line_no, "expected `time_s f0_hz`");
    }

    GroundTruthFrame frame;
    frame.time_s = time;
    frame.uncertain = f0 < 0.0;
    frame.f0_hz = f0 > 0.0 ? f0 : 0.0;

    if (!truth.frames.empty()) {
      const double dt = time - truth.frames.back().time_s;
      if (!(dt > 0.0)) bad_line(path, line_no, "times must increase");
      if (truth.hop_s == 0.0) {
        truth.hop_s = dt;
      } else if (std::abs(dt - truth.hop_s) >
                 std::max(1e-4, 1e-3 * truth.hop_s)) {
        bad_line(path, line_no, "non-uniform frame times");
      }
    }
    truth.frames.push_back(frame);
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
  if (truth.frames.empty()) {
    throw ParseError(path.string() + ": no frames");
  }
  return truth;
}

void write_plot_data(const PitchTrack& track, const GroundTruthTrack* truth,
                     const std::filesystem::path& path) {
  auto out = open_out(path);
  out << kTrackHeader << ",ref_f0_hz\n";
  const double tol = truth != nullptr && truth->hop_s > 0.0
                         ? truth->hop_s / 2.0 + 1e-9
                         : 0.0;
  std::size_t j = 0;
  for (const PitchFrame& f : track.frames) {
    out << num(f.time_s) << ',' << num(f.f0_hz) << ',' << num(f.srh_score)
        << ',' << (f.voiced ? 1 : 0) << ',';
    if (truth != nullptr && !truth->frames.empty()) {
      while (j + 1 < truth->frames.size() &&
             truth->frames[j + 1].time_s <= f.time_s) {
        ++j;
      }
      std::size_t best = j;
      if (j + 1 < truth->frames.size() &&
          truth->frames[j + 1].time_s - f.time_s <
              f.time_s - truth->frames[j].time_s) {
        best = j + 1;
      }
      const auto& ref = truth->frames[best];
      if (std::abs(ref.time_s - f.time_s) <= tol) out << num(ref.f0_hz);
    }
    out << '\n';
  }
  finish_out(out, path);
}

void write_srh_surface(const SrhSurface& surface,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "time_s,frequency_hz,srh\n";
  const std::size_t n_freq = surface.frequencies_hz.size();
  for (std::size_t i = 0; i < surface.times_s.size(); ++i) {
    for (std::size_t k = 0; k < n_freq; ++k) {
      out << num(surface.times_s[i]) << ',' << num(surface.frequencies_hz[k])
          << ',' << num(surface.values[i * n_freq + k]) << '\n';
    }
  }
  finish_out(out, path);
}

SrhSurface read_srh_surface(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line) || trim(line) != "time_s,frequency_hz,srh") {
    bad_line(path, 1, "expected header `time_s,frequency_hz,srh`");
  }

  SrhSurface surface;
  std::size_t line_no = 1;
  std::size_t n_freq = 0;  // 0 until the first time change fixes the grid
  std::size_t col = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto stripped = trim(line);
    if (stripped.empty()) continue;
    const auto fields = split_csv(stripped);
    double t = 0.0;
    double f = 0.0;
    double v = 0.0;
    if (fields.size() != 3 || !parse_double(fields[0], t) ||
        !parse_double(fields[1], f) || !parse_double(fields[2], v)) {
      bad_line(path, line_no, "malformed row");
    }
    if (surface.times_s.empty() ||
        (t != surface.times_s.back() && (n_freq == 0 || col == n_freq))) {
      if (!surface.times_s.empty() && n_freq == 0) n_freq = col;
      surface.times_s.push_back(t);
      col = 0;
    } else if (t != surface.times_s.back()) {
      bad_line(path, line_no, "ragged surface grid");
    }
    if (n_freq == 0) {
      if (col == surface.frequencies_hz.size()) {
        surface.frequencies_hz.push_back(f);
      }
    } else if (col >= n_freq || f != surface.frequencies_hz[col]) {
      bad_line(path, line_no, "ragged surface grid");
    }
    surface.values.push_back(v);
    ++col;
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
  if (surface.times_s.empty()) {
    throw ParseError(path.string() + ": no rows");
  }
  if (n_freq == 0) n_freq = col;
  if (col != n_freq ||
      surface.values.size() != surface.times_s.size() * n_freq) {
    throw ParseError(path.string() + ": ragged surface grid");
  }
  return surface;
}

}  // namespace srh
