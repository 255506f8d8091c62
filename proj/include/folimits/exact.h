// Copyright 2026 The folimits Authors
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

#ifndef FOLIMITS_EXACT_H_
#define FOLIMITS_EXACT_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace folimits {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt Factorial(int n);

// n^k for small integers, exact.
BigInt IntPow(const BigInt& base, int exponent);

// "p/q" (or "p" when q == 1).
std::string ToString(const Rational& value);
std::string ToString(const BigInt& value);

double ToDouble(const Rational& value);
double ToDouble(const BigInt& value);

}  // namespace folimits

#endif  // FOLIMITS_EXACT_H_
