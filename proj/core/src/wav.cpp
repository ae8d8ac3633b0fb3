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

#include "srh/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "srh/error.hpp"

namespace srh {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

[[noreturn]] void bad(const std::filesystem::path& path, std::size_t offset,
                      const std::string& what) {
  throw ParseError(path.string() + ": " + what + " (byte " +
                   std::to_string(offset) + ")");
}

struct Reader {
  const std::filesystem::path& path;
  const std::vector<unsigned char>& bytes;

  void need(std::size_t offset, std::size_t count,
            const char* what) const {
    if (offset + count > bytes.size() || offset + count < offset) {
      bad(path, offset, std::string("truncated ") + what);
    }
  }
  std::uint16_t u16(std::size_t offset) const {
    return static_cast<std::uint16_t>(bytes[offset] |
                                      (bytes[offset + 1] << 8));
  }
  std::uint32_t u32(std::size_t offset) const {
    return static_cast<std::uint32_t>(bytes[offset]) |
           (static_cast<std::uint32_t>(bytes[offset + 1]) << 8) |
           (static_cast<std::uint32_t>(bytes[offset + 2]) << 16) |
           (static_cast<std::uint32_t>(bytes[offset + 3]) << 24);
  }
  bool tag(std::size_t offset, const char* expect) const {
    return std::memcmp(bytes.data() + offset, expect, 4) == 0;
  }
};

double decode_sample(const unsigned char* p, std::uint16_t bits,
                     std::uint16_t format) {
  if (format == kFormatFloat) {
    float f;
    std::memcpy(&f, p, sizeof f);
    return static_cast<double>(f);
  }
  switch (bits) {
    case 8:
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16: {
      const auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
      return v / 32768.0;
    }
    default: {  // 24
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v |= ~0xFFFFFF;
      return v / 8388608.0;
    }
  }
}

}  // namespace

AudioSignal read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("read failure on " + path.string());

  const Reader r{path, bytes};
  r.need(0, 12, "RIFF header");
  if (!r.tag(0, "RIFF")) bad(path, 0, "not a RIFF file");
  if (!r.tag(8, "WAVE")) bad(path, 8, "not a WAVE file");

  bool have_fmt = false;
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
  std::size_t data_offset = 0;
  std::size_t data_size = 0;
  bool have_data = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::size_t body = pos + 8;
    const std::uint32_t size = r.u32(pos + 4);
    if (r.tag(pos, "fmt ")) {
      if (size < 16) bad(path, pos, "fmt chunk too small");
      r.need(body, 16, "fmt chunk");
      format = r.u16(body);
      channels = r.u16(body + 2);
      sample_rate = r.u32(body + 4);
      bits = r.u16(body + 14);
      if (format == kFormatExtensible) {
        // Real format code sits in the first two bytes of the SubFormat
        // GUID.
        if (size < 40) bad(path, pos, "extensible fmt chunk too small");
        r.need(body, 40, "fmt chunk");
        format = r.u16(body + 24);
      }
      have_fmt = true;
    } else if (r.tag(pos, "data")) {
      r.need(body, size, "data chunk");
      data_offset = body;
      data_size = size;
      have_data = true;
    }
    pos = body + size + (size & 1);  // chunks are word-aligned
  }

  if (!have_fmt) bad(path, bytes.size(), "missing fmt chunk");
  if (!have_data) bad(path, bytes.size(), "missing data chunk");
  if (format != kFormatPcm && format != kFormatFloat) {
    bad(path, data_offset, "unsupported format tag " + std::to_string(format));
  }
  if (format == kFormatPcm && bits != 8 && bits != 16 && bits != 24) {
    bad(path, data_offset, "unsupported PCM depth " + std::to_string(bits));
  }
  if (format == kFormatFloat && bits != 32) {
    bad(path, data_offset, "unsupported float depth " + std::to_string(bits));
  }
  if (channels == 0) bad(path, data_offset, "zero channels");
  if (sample_rate == 0) bad(path, data_offset, "zero sample rate");

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t stride = bytes_per_sample * channels;
  const std::size_t n_frames = data_size / stride;

  AudioSignal signal;
  signal.sample_rate = static_cast<int>(sample_rate);
  signal.samples.resize(n_frames);
  const unsigned char* base = bytes.data() + data_offset;
  for (std::size_t t = 0; t < n_frames; ++t) {
    double acc = 0.0;
    for (std::size_t c = 0; c < channels; ++c) {
      acc += decode_sample(base + t * stride + c * bytes_per_sample, bits,
                           format);
    }
    signal.samples[t] = acc / channels;
  }
  return signal;
}

namespace {

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

}  // namespace

void write_wav(const AudioSignal& signal, const std::filesystem::path& path,
               WavSampleFormat format) {
  if (signal.sample_rate <= 0) {
    throw std::invalid_argument("sample rate must be positive");
  }
  const bool is_float = format == WavSampleFormat::kFloat32;
  const std::uint16_t bytes_per_sample = is_float ? 4 : 2;
  const std::size_t n = signal.samples.size();
  const std::size_t data_size = n * bytes_per_sample;

  std::string out;
  out.reserve(60 + data_size);
  out += "RIFF";
  // riff size = everything after this field
  const std::size_t fmt_size = is_float ? 18 : 16;
  std::size_t riff_size = 4 + (8 + fmt_size) + (8 + data_size);
  if (is_float) riff_size += 8 + 4;  // fact chunk
  put_u32(out, static_cast<std::uint32_t>(riff_size));
  out += "WAVE";

  out += "fmt ";
  put_u32(out, static_cast<std::uint32_t>(fmt_size));
  put_u16(out, is_float ? kFormatFloat : kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(signal.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(signal.sample_rate *
                                          bytes_per_sample));
  put_u16(out, bytes_per_sample);  // block align
  put_u16(out, static_cast<std::uint16_t>(8 * bytes_per_sample));
  if (is_float) {
    put_u16(out, 0);  // cbSize
    out += "fact";
    put_u32(out, 4);
    put_u32(out, static_cast<std::uint32_t>(n));
  }

  out += "data";
  put_u32(out, static_cast<std::uint32_t>(data_size));
  for (double s : signal.samples) {
    if (is_float) {
      const auto f = static_cast<float>(s);
      std::uint32_t u;
      std::memcpy(&u, &f, sizeof u);
      put_u32(out, u);
    } else {
      const double scaled = std::clamp(std::round(s * 32768.0),
                                       -32768.0, 32767.0);
      put_u16(out, static_cast<std::uint16_t>(
                       static_cast<std::int16_t>(scaled)));
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failure on " + path.string());
}

}  // namespace srh
