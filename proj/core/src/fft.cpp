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

#include "srh/fft.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace srh::fft {

std::size_t next_power_of_two(std::size_t n) {
  if (n == 0) return 1;
  std::size_t p = 1;
  while (p < n) {
    if (p > (std::numeric_limits<std::size_t>::max() >> 1)) {
      throw std::overflow_error("next_power_of_two overflow");
    }
    p <<= 1;
  }
  return p;
}

namespace {

struct Plan {
  std::vector<std::size_t> bitrev;
  // w[j] = exp(-2*pi*i*j/n), j = 0..n/2-1; stage `len` uses stride n/len.
  std::vector<std::complex<double>> twiddles;
};

std::shared_ptr<const Plan> get_plan(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const Plan>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto plan = std::make_shared<Plan>();
  plan->bitrev.resize(n);
  for (std::size_t i = 1; i < n; ++i) {
    plan->bitrev[i] = (plan->bitrev[i >> 1] >> 1) | ((i & 1) ? (n >> 1) : 0);
  }
  plan->twiddles.resize(n / 2);
  const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n / 2; ++j) {
    plan->twiddles[j] = std::polar(1.0, step * static_cast<double>(j));
  }
  cache.emplace(n, plan);
  return plan;
}

}  // namespace

void transform(std::vector<std::complex<double>>& data) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("transform size must be a power of two");
  }
  const auto plan = get_plan(n);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = plan->bitrev[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::complex<double> w = plan->twiddles[j * stride];
        const std::complex<double> u = data[start + j];
        const std::complex<double> v = data[start + j + half] * w;
        data[start + j] = u + v;
        data[start + j + half] = u - v;
      }
    }
  }
}

}  // namespace srh::fft
