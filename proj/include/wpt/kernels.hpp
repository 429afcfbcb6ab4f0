// SPDX-License-Identifier: Apache-2.0
//
// wptsim - wireless power transfer signal design and rectenna simulation
// Copyright (C) 2026 The wptsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used by the
// library and a plain serial version kept as the reference the tests and
// benchmarks compare against.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace wpt::kernels
{

using cplx = std::complex<double>;

struct EvenMoments
{
    double m2 = 0.0; // mean of y^2
    double m4 = 0.0; // mean of y^4
};

EvenMoments power_moments_serial(std::span<const double> y);
EvenMoments power_moments(std::span<const double> y);

/// Sum over all index quadruples with n1 + n2 = n3 + n4 of
/// c[n1] c[n2] conj(c[n3]) conj(c[n4]).
///
/// The serial version walks the quadruples directly (O(N^3));
/// the parallel one uses sum_k |a_k|^2 with a = c * c (O(N^2)).
double fourth_order_sum_serial(std::span<const cplx> c);
double fourth_order_sum(std::span<const cplx> c);

/// Samples y_k = sum_n Re{c_n exp(j 2 pi h_n k / S)}, k = 0..S-1, where
/// h_n is the integer number of cycles tone n completes in one period.
std::vector<double> synthesize_serial(std::span<const cplx> c, std::span<const std::uint64_t> cycles,
                                      std::size_t samples);
std::vector<double> synthesize(std::span<const cplx> c, std::span<const std::uint64_t> cycles, std::size_t samples);

} // namespace wpt::kernels
