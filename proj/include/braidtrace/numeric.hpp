// Copyright 2026 The braidtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidtrace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Register precision cap: register values fit 32-bit words.
inline constexpr int kMaxPrecisionBits = 30;
/// Exhaustive-summation guard: exact traces enumerate all 2^{n*beta} strings.
inline constexpr int kMaxExactBits = 24;

/// ceil(num * 2^shift / den) for num >= 0, den > 0, as an exact integer.
inline BigInt ceil_shifted_ratio(const BigInt& num, const BigInt& den, int shift) {
    BigInt scaled = num << shift;
    return (scaled + den - 1) / den;
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRat& v) { return v.convert_to<double>(); }

/// Unit complex number e^{i angle}.
inline Complex unit_phase(double angle) { return std::polar(1.0, angle); }

}  // namespace braidtrace
