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

#include "nahm/numeric.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "nahm/error.hpp"

namespace nahm {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  if (s[0] == '+') s.erase(0, 1);
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    return Rational(BigInt(s));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d) || d[0] == '-')
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  BigInt dd(d);
  if (dd == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  Rational r(BigInt(n), dd);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const BigInt& x) { return x.get_str(); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  __int128 v = static_cast<__int128>(a / g) * b;
  if (v < 0) v = -v;
  if (v > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorCode::OutOfRange, "grain overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t to_int64(const BigInt& x) {
  if (!x.fits_slong_p()) throw Error(ErrorCode::OutOfRange, "integer does not fit in 64 bits");
  return x.get_si();
}

std::int64_t den64(const Rational& x) { return to_int64(x.get_den()); }

std::int64_t scale_to_grid(const Rational& x, std::int64_t g) {
  Rational y = x * Rational(g);
  if (y.get_den() != 1) throw Error(ErrorCode::OffGrain, to_string(x) + " is not on grain " + std::to_string(g));
  return to_int64(y.get_num());
}

BigInt floor_rational(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt ceil_rational(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

}  // namespace nahm
