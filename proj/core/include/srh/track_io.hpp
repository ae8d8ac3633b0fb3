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

#include <filesystem>
#include <iosfwd>

#include "srh/eval.hpp"
#include "srh/tracker.hpp"

namespace srh {

// Track CSV. Header is exactly `time_s,f0_hz,srh,voiced`; time, f0 and
// score carry 6 significant digits, voiced is 0/1, rows end with LF.
void write_track(const PitchTrack& track, std::ostream& out);
void write_track(const PitchTrack& track, const std::filesystem::path& path);

// Parses a track CSV back. Extra trailing columns (as in plot files) are
// ignored. config_used carries defaults and f0_mean_hz is 0: neither is
// stored in the file.
PitchTrack read_track(const std::filesystem::path& path);

// Two-column text reference: time_s then f0_hz, whitespace- or
// comma-separated, one frame per line. f0 = 0 marks unvoiced; a negative
// f0 marks an uncertain frame (stored unvoiced with the uncertain flag).
// Blank lines and lines starting with '#' are skipped. Throws ParseError
// (with the line number) for non-numeric fields, non-increasing times, a
// non-uniform hop or an empty file.
GroundTruthTrack read_truth(const std::filesystem::path& path);

// Track-versus-truth overlay, one row per estimate frame:
// `time_s,f0_hz,srh,voiced,ref_f0_hz`. The reference column holds the
// nearest truth value within half a hop and stays empty where none exists
// (or truth is null). Re-parseable by read_track.
void write_plot_data(const PitchTrack& track, const GroundTruthTrack* truth,
                     const std::filesystem::path& path);

// Long-format score surface: `time_s,frequency_hz,srh`.
void write_srh_surface(const SrhSurface& surface,
                       const std::filesystem::path& path);
SrhSurface read_srh_surface(const std::filesystem::path& path);

}  // namespace srh
