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

#ifndef CIRCLE_ORBIT_GEOMETRY_HPP
#define CIRCLE_ORBIT_GEOMETRY_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "circle_orbit/quartic_ring.hpp"
#include "circle_orbit/rank3.hpp"
#include "circle_orbit/serialize.hpp"

namespace circle_orbit {

/// Integer coordinates of a group element with respect to the generators.
using CoefficientVector = std::vector<long long>;

/// Group <1, alpha, ..., alpha^{k-1}> inside C for a circle root alpha.
struct RingSpec {
  ModulusPtr modulus;
  std::size_t embedding = 0;  // index into circle_embedding(q)
};

/// Group <v1/n, v2/n, v3/n> for unit vectors with the given inner products.
struct TripleSpec {
  InnerProductTriple triple;
};

class GroupSpec {
 public:
  /// q must be a valid ring modulus, reciprocal of even degree, with at least
  /// embedding + 1 circle roots.
  static GroupSpec ring(IntPolynomial q, std::size_t embedding = 0);
  static GroupSpec triple(InnerProductTriple t);

  int dimension() const;
  bool is_ring() const { return std::holds_alternative<RingSpec>(variant_); }
  const RingSpec& ring_spec() const { return std::get<RingSpec>(variant_); }
  const TripleSpec& triple_spec() const { return std::get<TripleSpec>(variant_); }

  /// Exact |element| == 1 test.
  bool is_circle_point(std::span<const long long> coeffs) const;
  /// Planar position (certified midpoints for the ring variant).
  std::pair<double, double> position(std::span<const long long> coeffs) const;

  Json describe() const;

 private:
  explicit GroupSpec(std::variant<RingSpec, TripleSpec> v);

  std::variant<RingSpec, TripleSpec> variant_;
  ComplexBox root_box_;  // ring variant: alpha at width 1e-12
};

/// Lexicographic list of [-B, B]^k vectors (B >= 0) on the unit circle.
std::vector<CoefficientVector> enumerate_circle_points(const GroupSpec& spec, long long bound,
                                                       const EnumerationOptions& options = {});

struct UnitDistanceGraph {
  long long bound = 0;
  std::vector<CoefficientVector> vertices;  // all of [-B, B]^k, lexicographic
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  std::vector<std::size_t> degrees;

  std::map<std::size_t, std::size_t> degree_histogram() const;
  /// Index of the zero vector.
  std::size_t origin() const { return vertices.size() / 2; }
};

UnitDistanceGraph build_graph(const GroupSpec& spec, long long bound, const EnumerationOptions& options = {});

std::size_t degree_of_origin(const GroupSpec& spec, long long bound, const EnumerationOptions& options = {});

inline std::size_t unit_distance_count(const UnitDistanceGraph& g) { return g.edges.size(); }

/// degree_of_origin for B = 1 .. max_bound and the first B from which the
/// value no longer changes within that range.
struct DegreeProfile {
  std::vector<std::size_t> degrees;
  long long threshold = 1;
};
DegreeProfile degree_profile(const GroupSpec& spec, long long max_bound, const EnumerationOptions& options = {});

enum class ExportFormat { Json, Dot, Svg };
ExportFormat parse_export_format(std::string_view name);

std::string render_graph(const UnitDistanceGraph& g, const GroupSpec& spec, ExportFormat format);
std::string render_points(const std::vector<CoefficientVector>& points, long long bound, const GroupSpec& spec,
                          ExportFormat format);

/// Writes text to path; failures raise IoError naming the path.
void write_file(const std::string& path, const std::string& text);

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_GEOMETRY_HPP
