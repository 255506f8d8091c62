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


#ifndef FOLIMITS_REPORT_H_
#define FOLIMITS_REPORT_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "folimits/exact.h"
#include "folimits/families.h"
#include "folimits/intervals.h"
#include "folimits/limits.h"
#include "folimits/model.h"
#include "folimits/montecarlo.h"
#include "folimits/shapes.h"

namespace folimits {

using Json = nlohmann::ordered_json;

// Every floating-point value leaves the library with 12 significant digits.
inline constexpr int kSignificantDigits = 12;

std::string FormatSig(double value);

// `value` rounded to 12 significant digits.
double RoundSig(double value);

// Rounded number, or null when not finite.
Json Number(double value);

// {"value": "p/q", "approx": double}
Json RationalJson(const Rational& value);

Json ModelJson(const ModelParams& model);
Json ShapeJson(const UnicycleShape& shape);
Json ShapeJson(const FragmentShape& shape);
Json IntervalsJson(const std::vector<Interval>& intervals);

Json ToJson(const C0Result& result);
Json ToJson(const GapReport& report);
Json ToJson(const SweepRow& row);
Json ToJson(const ApproxResult& result);
Json ToJson(const FamilyCheck& check);
Json ToJson(const InverseAutBoundCheck& check);
Json ToJson(const AutBoundReport& report);
Json ToJson(const SimResult& result);

}  // namespace folimits

#endif  // FOLIMITS_REPORT_H_
