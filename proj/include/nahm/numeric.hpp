// Copyright 2026 The nahm-dynkin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nahm {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p" and "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Throws OutOfRange when the value does not fit.
std::int64_t to_int64(const BigInt& x);

// Denominator of x as a 64-bit integer.
std::int64_t den64(const Rational& x);

// x * g, which must be an integer.
std::int64_t scale_to_grid(const Rational& x, std::int64_t g);

// Smallest integer >= x.
BigInt ceil_rational(const Rational& x);
BigInt floor_rational(const Rational& x);

}  // namespace nahm
