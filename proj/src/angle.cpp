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

#include "iqwalk/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "iqwalk/errors.hpp"

namespace iqwalk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

[[noreturn]] void bad_token(std::string_view token) {
  throw UsageError("cannot parse angle '" + std::string(token) + "' (use a decimal or k*pi/m)");
}

}  // namespace

double parse_angle(std::string_view token) {
  std::string_view s = trim(token);
  double value = 0.0;
  if (parse_double(s, value)) return value;

  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) bad_token(token);

  double factor = 1.0;
  std::string_view head = trim(s.substr(0, pi_at));
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty()) {
    if (head.back() != '*') bad_token(token);
    head.remove_suffix(1);
    if (!parse_double(head, factor)) bad_token(token);
  }

  double divisor = 1.0;
  std::string_view tail = trim(s.substr(pi_at + 2));
  if (!tail.empty()) {
    if (tail.front() != '/') bad_token(token);
    tail.remove_prefix(1);
    if (!parse_double(tail, divisor) || divisor == 0.0) bad_token(token);
  }
  return factor * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_angle(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_angle(double value, int max_denominator) {
  if (value == 0.0) return "0";
  for (int m = 1; m <= max_denominator; ++m) {
    const double k = value * m / std::numbers::pi;
    const double rounded = std::round(k);
    if (std::abs(k - rounded) < 1e-12 * m && rounded != 0.0) {
      const long kk = static_cast<long>(rounded);
      if (std::gcd(kk, static_cast<long>(m)) != 1) continue;
      std::string out = kk == 1 ? "pi" : kk == -1 ? "-pi" : std::to_string(kk) + "*pi";
      if (m != 1) out += "/" + std::to_string(m);
      return out;
    }
  }
  return format_number(value);
}

}  // namespace iqwalk
