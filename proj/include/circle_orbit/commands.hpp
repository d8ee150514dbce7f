/*
   Copyright 2026 The circle-orbit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-level reports. Each returns the exact bytes the CLI writes.

#ifndef CIRCLE_ORBIT_COMMANDS_HPP
#define CIRCLE_ORBIT_COMMANDS_HPP

#include <array>
#include <string>
#include <vector>

#include "circle_orbit/geometry.hpp"

namespace circle_orbit {

enum class TableFormat { Json, Csv };
TableFormat parse_table_format(std::string_view name);

/// Default root isolation width, 10^-6.
Rational default_precision();

/// decimals > 0 adds decimal renderings of the root enclosures.
std::string cmd_analyze(const IntPolynomial& q, const Rational& width, int decimals = 0);

/// The number of powers counts against options.cap.
std::string cmd_orbit(const IntPolynomial& q, long long m_min, long long m_max, const EnumerationOptions& options = {});

std::string cmd_graph(const GroupSpec& spec, long long bound, ExportFormat format,
                      const EnumerationOptions& options = {});

std::string cmd_circle_points(const GroupSpec& spec, long long bound, ExportFormat format,
                              const EnumerationOptions& options = {});

std::string cmd_rank3(const InnerProductTriple& t, const std::vector<long long>& schedule,
                      const EnumerationOptions& options = {});

/// z^4 + a z^3 + b z^2 + a z + 1 for |a|, |b| <= bound, a-major order.
std::string cmd_scan(long long bound, const Rational& width, TableFormat format,
                     const EnumerationOptions& options = {});

/// All (x, y, z) in [-B, B]^3 with xyz != 0 and 1/x + 1/y + 1/z = 0.
std::string cmd_egyptian(long long bound, TableFormat format, const EnumerationOptions& options = {});
std::string cmd_egyptian_point(long long x, long long y, long long z);

std::string cmd_case_polys(const std::array<Integer, 3>& abc, const std::array<Rational, 3>& base);
/// Takes (a, b, c) and the base point from the solutions of t in [-B, B]^3;
/// the solution span must be two-dimensional.
std::string cmd_case_polys(const InnerProductTriple& t, long long bound, const EnumerationOptions& options = {});

/// Exact decimal rounding of x to the given number of digits.
std::string to_decimal(const Rational& x, int digits);

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_COMMANDS_HPP
