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

#include <complex>
#include <cstddef>
#include <vector>

namespace srh::fft {

constexpr bool is_power_of_two(std::size_t n) {
  return n != 0 && (n & (n - 1)) == 0;
}

// Smallest power of two >= n (n >= 1).
std::size_t next_power_of_two(std::size_t n);

// In-place forward DFT, X[k] = sum_n x[n] exp(-2*pi*i*k*n/N).
// The size must be a power of two. Twiddle tables are cached per size and
// shared across threads.
void transform(std::vector<std::complex<double>>& data);

}  // namespace srh::fft
