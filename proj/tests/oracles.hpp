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

// Independent brute-force reference implementations the tests compare
// against. Deliberately naive: correctness over speed.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "srh/eval.hpp"

namespace oracle {

// O(N^2) DFT magnitudes of the zero-padded frame, bins 0..n/2.
inline std::vector<double> dft_magnitudes(std::span<const double> frame,
                                          std::size_t n) {
  std::vector<double> mags(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < frame.size(); ++t) {
      const double phase = -2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(t) / static_cast<double>(n);
      acc += frame[t] * std::polar(1.0, phase);
    }
    mags[k] = std::abs(acc);
  }
  return mags;
}

// Solves the Toeplitz normal equations sum_k a_k r[|i-k|] = r[i] by plain
// Gaussian elimination with partial pivoting.
inline std::vector<double> toeplitz_solve(std::span<const double> r,
                                          int order) {
  const auto p = static_cast<std::size_t>(order);
  std::vector<std::vector<double>> m(p, std::vector<double>(p + 1));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      m[i][k] = r[static_cast<std::size_t>(
          std::abs(static_cast<long>(i) - static_cast<long>(k)))];
    }
    m[i][p] = r[i + 1];
  }
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < p; ++i) {
      if (std::abs(m[i][col]) > std::abs(m[pivot][col])) pivot = i;
    }
    std::swap(m[col], m[pivot]);
    if (m[col][col] == 0.0) throw std::runtime_error("singular system");
    for (std::size_t i = col + 1; i < p; ++i) {
      const double f = m[i][col] / m[col][col];
      for (std::size_t k = col; k <= p; ++k) m[i][k] -= f * m[col][k];
    }
  }
  std::vector<double> a(p);
  for (std::size_t i = p; i-- > 0;) {
    double acc = m[i][p];
    for (std::size_t k = i + 1; k < p; ++k) acc -= m[i][k] * a[k];
    a[i] = acc / m[i][i];
  }
  return a;
}

struct MetricOracle {
  std::size_t frames = 0;
  std::size_t voicing_errors = 0;
  std::size_t both_voiced = 0;
  std::size_t gross = 0;
  std::vector<double> fine_pct;

  double vde() const {
    return 100.0 * static_cast<double>(voicing_errors) /
           static_cast<double>(frames);
  }
  double gpe() const {
    return both_voiced == 0 ? 0.0
                            : 100.0 * static_cast<double>(gross) /
                                  static_cast<double>(both_voiced);
  }
  double ffe() const {
    return 100.0 * static_cast<double>(voicing_errors + gross) /
           static_cast<double>(frames);
  }
  bool has_fpe() const { return fine_pct.size() >= 2; }
  double fpe() const {
    double mean = 0.0;
    for (double e : fine_pct) mean += e;
    mean /= static_cast<double>(fine_pct.size());
    double var = 0.0;
    for (double e : fine_pct) var += (e - mean) * (e - mean);
    return std::sqrt(var / static_cast<double>(fine_pct.size()));
  }
};

inline MetricOracle count_errors(std::span<const srh::AlignedPair> pairs) {
  MetricOracle o;
  for (const auto& p : pairs) {
    o.frames += 1;
    if (p.ref_voiced != p.est_voiced) o.voicing_errors += 1;
    if (p.ref_voiced && p.est_voiced) {
      o.both_voiced += 1;
      const double rel = (p.est_f0_hz - p.ref_f0_hz) / p.ref_f0_hz;
      if (std::abs(rel) > 0.20) {
        o.gross += 1;
      } else {
        o.fine_pct.push_back(100.0 * rel);
      }
    }
  }
  return o;
}

}  // namespace oracle
