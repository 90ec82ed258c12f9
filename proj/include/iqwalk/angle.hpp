// Copyright 2026 The iqwalk Authors
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

#include <string>
#include <string_view>
#include <vector>

namespace iqwalk {

/// Parses a radian value written either as a decimal ("0.785") or as a
/// multiple of pi: "pi", "-pi", "3*pi", "pi/4", "7*pi/20", "0.5*pi/2".
/// Throws UsageError on anything else.
double parse_angle(std::string_view token);

/// Comma-separated list of angle tokens.
std::vector<double> parse_angle_list(std::string_view text);

/// "k*pi/m" for the smallest m <= max_denominator that represents `value`
/// to 1e-12, otherwise the decimal with 12 significant digits.
std::string format_angle(double value, int max_denominator = 120);

/// Decimal with 12 significant digits; negative zero prints as "0".
std::string format_number(double value);

}  // namespace iqwalk
