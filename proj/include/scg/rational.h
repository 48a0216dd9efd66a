// Copyright 2026 The SCG Authors. All rights reserved.
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

#ifndef SCG_RATIONAL_H_
#define SCG_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace scg {

// Exact arithmetic for every cost, payoff, probability and certificate
// parameter in the library.
using Rational = mpq_class;

// Accepts "p", "p/q" and "-p/q"; the result is canonicalized. Throws
// ParseError on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// Always "p/q", with q = 1 written out, so output is unambiguous.
std::string ToString(const Rational& value);

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// floor(value) for exact rationals.
Rational Floor(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace scg

#endif  // SCG_RATIONAL_H_
