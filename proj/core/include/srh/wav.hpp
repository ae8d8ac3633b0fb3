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

#include "srh/audio.hpp"

namespace srh {

// Reads a PCM WAV file: 8/16/24-bit integer or 32-bit float, mono or
// multichannel (channels are averaged to mono). Integer samples are scaled
// to [-1, 1) by the type's maximum magnitude. Throws ParseError with the
// offending byte offset for malformed or compressed content, IoError when
// the file cannot be read.
AudioSignal read_wav(const std::filesystem::path& path);

enum class WavSampleFormat { kInt16, kFloat32 };

// Writes a mono WAV file. kInt16 rounds and clamps to [-32768, 32767];
// samples read from a 16-bit file round-trip bit-exactly.
void write_wav(const AudioSignal& signal, const std::filesystem::path& path,
               WavSampleFormat format = WavSampleFormat::kInt16);

}  // namespace srh
