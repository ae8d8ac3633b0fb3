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
#include <optional>
#include <string>
#include <vector>

#include "srh/eval.hpp"
#include "srh/tracker.hpp"

namespace srh {

struct ManifestInput {
  std::filesystem::path audio;
  std::filesystem::path truth;  // empty = no reference, metrics skipped
};

// Parsed batch manifest. Plain key = value lines; `input` may repeat and
// takes an audio path plus an optional truth path. `#` starts a comment.
// Relative paths resolve against the manifest's directory.
struct RunManifest {
  std::vector<ManifestInput> inputs;
  std::filesystem::path out_dir;
  std::string condition = "clean";

  // Optional noise mixing applied to every input before tracking.
  std::filesystem::path noise;  // empty = no mixing
  double snr_db = 0.0;
  std::size_t noise_offset = 0;

  TrackerConfig tracker;
  UncertainPolicy uncertain = UncertainPolicy::kAsUnvoiced;

  bool write_plot = false;
  bool write_surface = false;
  int jobs = 1;
};

RunManifest read_manifest(const std::filesystem::path& path);

struct FileOutcome {
  std::filesystem::path audio;
  bool ok = false;
  std::string error;  // set when !ok
  std::optional<EvalReport> report;
};

struct BatchResult {
  std::vector<FileOutcome> files;
  std::optional<EvalReport> pooled;  // over all evaluated files
  int failures = 0;
};

// Runs the manifest: tracks every input (after optional noise mixing),
// writes per-file track CSVs into out_dir, and when references are given
// evaluates them and writes metrics.csv with one row per file plus a
// pooled ALL row. A failing file is reported in its outcome and does not
// abort the rest. jobs > 1 processes files concurrently.
BatchResult run_batch(const RunManifest& manifest);

}  // namespace srh
