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

#include "circle_orbit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace circle_orbit {

namespace {

const Rational kEmbeddingWidth(1, 1000000000000L);

std::vector<Integer> to_integers(std::span<const long long> coeffs) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.emplace_back(static_cast<long>(c));
  return v;
}

}  // namespace

GroupSpec::GroupSpec(std::variant<RingSpec, TripleSpec> v) : variant_(std::move(v)) {}

GroupSpec GroupSpec::ring(IntPolynomial q, std::size_t embedding) {
  ModulusPtr modulus = RingModulus::create(std::move(q));
  if (!modulus->reciprocal() || modulus->degree() % 2 != 0)
    throw InvalidModulus("ring spec needs a reciprocal modulus of even degree");
  std::vector<ComplexBox> roots = circle_embedding(modulus->polynomial(), kEmbeddingWidth);
  if (embedding >= roots.size())
    throw InvalidModulus("modulus has " + std::to_string(roots.size()) + " circle root(s); index " +
                         std::to_string(embedding) + " requested");
  GroupSpec spec(RingSpec{std::move(modulus), embedding});
  spec.root_box_ = roots[embedding];
  return spec;
}

GroupSpec GroupSpec::triple(InnerProductTriple t) {
  if (t.n < 1) throw InvalidInput("n must be positive");
  if (!gram_residual(t.alpha, t.beta, t.gamma).is_zero())
    throw InvalidInput("inner products are not realisable by coplanar unit vectors");
  if (t.gamma.abs() >= QuadExtScalar(1))
    throw DegenerateConfiguration("|gamma| >= 1: v1 and v2 do not span the plane");
  return GroupSpec(TripleSpec{std::move(t)});
}

int GroupSpec::dimension() const { return is_ring() ? ring_spec().modulus->degree() : 3; }

bool GroupSpec::is_circle_point(std::span<const long long> coeffs) const {
  if (static_cast<int>(coeffs.size()) != dimension()) throw InvalidInput("coefficient vector has wrong length");
  if (is_ring()) return circle_norm(RingElement(ring_spec().modulus, to_integers(coeffs))).is_one();
  const auto& t = triple_spec().triple;
  return q_eval(t, coeffs[0], coeffs[1], coeffs[2]) ==
         QuadExtScalar(Rational(static_cast<long>(t.n * t.n)));
}

std::pair<double, double> GroupSpec::position(std::span<const long long> coeffs) const {
  if (is_ring()) {
    ComplexBox value = evaluate(to_integers(coeffs), root_box_);
    return {value.re.midpoint().get_d(), value.im.midpoint().get_d()};
  }
  // v1 = (1, 0), v2 = (gamma, s2), v3 = (beta, (alpha - beta gamma) / s2).
  const auto& t = triple_spec().triple;
  double g = t.gamma.to_double();
  double s2 = std::sqrt(1.0 - g * g);
  double b = t.beta.to_double();
  double s3 = (t.alpha - t.beta * t.gamma).to_double() / s2;
  double n = static_cast<double>(t.n);
  double x = static_cast<double>(coeffs[0]), y = static_cast<double>(coeffs[1]), z = static_cast<double>(coeffs[2]);
  return {(x + y * g + z * b) / n, (y * s2 + z * s3) / n};
}

Json GroupSpec::describe() const {
  Json j;
  if (is_ring()) {
    j["type"] = "ring";
    j["modulus"] = to_json(ring_spec().modulus->polynomial());
    j["embedding"] = ring_spec().embedding;
  } else {
    j["type"] = "triple";
    j["triple"] = to_json(triple_spec().triple);
  }
  return j;
}

namespace {

using CircleTest = std::function<bool(const CoefficientVector&)>;

CircleTest make_circle_test(const GroupSpec& spec, long long max_coordinate) {
  if (spec.is_ring()) {
    ModulusPtr modulus = spec.ring_spec().modulus;
    return [modulus](const CoefficientVector& v) {
      return circle_norm(RingElement(modulus, to_integers(v))).is_one();
    };
  }
  auto tester = std::make_shared<SolutionTester>(spec.triple_spec().triple, max_coordinate);
  return [tester](const CoefficientVector& v) { return (*tester)(v[0], v[1], v[2]); };
}

// Visits [-B, B]^k in lexicographic order with the first coordinate
// restricted to [first_lo, first_hi].
template <class Visit>
void for_each_in_box(int k, long long bound, long long first_lo, long long first_hi, Visit&& visit) {
  CoefficientVector v(static_cast<std::size_t>(k), -bound);
  v[0] = first_lo;
  if (first_lo > first_hi) return;
  for (;;) {
    visit(v);
    int i = k - 1;
    while (i >= 0) {
      long long top = i == 0 ? first_hi : bound;
      if (v[static_cast<std::size_t>(i)] < top) {
        ++v[static_cast<std::size_t>(i)];
        break;
      }
      v[static_cast<std::size_t>(i)] = -bound;
      --i;
    }
    if (i < 0) return;
  }
}

std::vector<CoefficientVector> circle_points_in_box(const GroupSpec& spec, long long bound,
                                                    const EnumerationOptions& options) {
  int k = spec.dimension();
  check_box_size(bound, k, options.cap);
  CircleTest test = make_circle_test(spec, bound);
  unsigned workers = std::max(1U, options.workers);
  long long span = 2 * bound + 1;
  std::vector<std::vector<CoefficientVector>> partial(workers);
  auto scan = [&](unsigned w) {
    long long lo = -bound + span * w / workers;
    long long hi = -bound + span * (w + 1) / workers - 1;
    for_each_in_box(k, bound, lo, hi, [&](const CoefficientVector& v) {
      if (test(v)) partial[w].push_back(v);
    });
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  std::vector<CoefficientVector> out;
  for (auto& chunk : partial) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace

std::vector<CoefficientVector> enumerate_circle_points(const GroupSpec& spec, long long bound,
                                                       const EnumerationOptions& options) {
  if (bound < 0) throw InvalidInput("box bound must be nonnegative");
  return circle_points_in_box(spec, bound, options);
}

std::map<std::size_t, std::size_t> UnitDistanceGraph::degree_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t d : degrees) ++h[d];
  return h;
}

UnitDistanceGraph build_graph(const GroupSpec& spec, long long bound, const EnumerationOptions& options) {
  if (bound < 0) throw InvalidInput("box bound must be nonnegative");
  int k = spec.dimension();
  check_box_size(bound, k, options.cap);
  UnitDistanceGraph g;
  g.bound = bound;
  for_each_in_box(k, bound, -bound, bound, [&](const CoefficientVector& v) { g.vertices.push_back(v); });
  g.degrees.assign(g.vertices.size(), 0);
  if (bound == 0) return g;

  // Differences of box points live in [-2B, 2B]^k.
  std::vector<CoefficientVector> steps = circle_points_in_box(spec, 2 * bound, options);
  long long side = 2 * bound + 1;
  auto index_of = [&](const CoefficientVector& v) -> std::optional<std::size_t> {
    std::size_t idx = 0;
    for (long long c : v) {
      if (c < -bound || c > bound) return std::nullopt;
      idx = idx * static_cast<std::size_t>(side) + static_cast<std::size_t>(c + bound);
    }
    return idx;
  };
  CoefficientVector w(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (const auto& step : steps) {
      for (std::size_t c = 0; c < w.size(); ++c) w[c] = g.vertices[i][c] + step[c];
      auto j = index_of(w);
      if (!j) continue;
      ++g.degrees[i];
      if (*j > i) g.edges.emplace_back(i, *j);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::size_t degree_of_origin(const GroupSpec& spec, long long bound, const EnumerationOptions& options) {
  return enumerate_circle_points(spec, bound, options).size();
}

DegreeProfile degree_profile(const GroupSpec& spec, long long max_bound, const EnumerationOptions& options) {
  if (max_bound < 1) throw InvalidInput("profile bound must be >= 1");
  DegreeProfile out;
  // One enumeration at the largest box; smaller boxes are filters of it.
  std::vector<CoefficientVector> points = enumerate_circle_points(spec, max_bound, options);
  for (long long b = 1; b <= max_bound; ++b) {
    out.degrees.push_back(static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [b](const auto& v) {
      return std::all_of(v.begin(), v.end(), [b](long long c) { return std::llabs(c) <= b; });
    })));
  }
  out.threshold = max_bound;
  while (out.threshold > 1 &&
         out.degrees[static_cast<std::size_t>(out.threshold - 2)] == out.degrees.back())
    --out.threshold;
  return out;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "svg") return ExportFormat::Svg;
  throw InvalidInput("unknown export format '" + std::string(name) + "'");
}

namespace {

Json vector_json(const CoefficientVector& v) {
  Json a = Json::array();
  for (long long c : v) a.push_back(c);
  return a;
}

std::string vector_label(const CoefficientVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

constexpr double kCanvas = 1000.0;
constexpr double kCenter = 500.0;
constexpr double kRadius = 400.0;

std::pair<double, double> to_canvas(std::pair<double, double> p) {
  return {kCenter + kRadius * p.first, kCenter - kRadius * p.second};
}

std::string svg_document(const std::vector<std::pair<double, double>>& positions,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 "
      << kCanvas << " " << kCanvas << "\">\n";
  out << "  <circle class=\"unit\" cx=\"500\" cy=\"500\" r=\"400\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  for (const auto& [i, j] : edges) {
    auto a = to_canvas(positions[i]);
    auto b = to_canvas(positions[j]);
    out << "  <line x1=\"" << fixed(a.first) << "\" y1=\"" << fixed(a.second) << "\" x2=\"" << fixed(b.first)
        << "\" y2=\"" << fixed(b.second) << "\" stroke=\"#336699\" stroke-width=\"0.5\"/>\n";
  }
  for (const auto& p : positions) {
    auto c = to_canvas(p);
    out << "  <circle class=\"pt\" cx=\"" << fixed(c.first) << "\" cy=\"" << fixed(c.second)
        << "\" r=\"3\" fill=\"#cc3311\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_graph(const UnitDistanceGraph& g, const GroupSpec& spec, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: {
      Json j;
      j["spec"] = spec.describe();
      j["B"] = g.bound;
      Json vertices = Json::array();
      for (const auto& v : g.vertices) vertices.push_back(vector_json(v));
      j["vertices"] = vertices;
      Json edges = Json::array();
      for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
      j["edges"] = edges;
      Json hist = Json::object();
      for (const auto& [deg, count] : g.degree_histogram()) hist[std::to_string(deg)] = count;
      j["degree_histogram"] = hist;
      if (!g.vertices.empty()) j["origin_degree"] = g.degrees[g.origin()];
      j["unit_distance_count"] = g.edges.size();
      return dump(j);
    }
    case ExportFormat::Dot: {
      std::ostringstream out;
      out << "graph unit_distance {\n";
      for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out << "  " << i << " [label=\"" << vector_label(g.vertices[i]) << "\"];\n";
      for (const auto& [a, b] : g.edges) out << "  " << a << " -- " << b << ";\n";
      out << "}\n";
      return out.str();
    }
    case ExportFormat::Svg: {
      std::vector<std::pair<double, double>> positions;
      positions.reserve(g.vertices.size());
      for (const auto& v : g.vertices) positions.push_back(spec.position(v));
      return svg_document(positions, g.edges);
    }
  }
  return {};
}

std::string render_points(const std::vector<CoefficientVector>& points, long long bound, const GroupSpec& spec,
                          ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: {
      Json j;
      j["spec"] = spec.describe();
      j["B"] = bound;
      Json pts = Json::array();
      for (const auto& v : points) pts.push_back(vector_json(v));
      j["points"] = pts;
      j["count"] = points.size();
      return dump(j);
    }
    case ExportFormat::Dot: {
      std::ostringstream out;
      out << "graph circle_points {\n";
      for (std::size_t i = 0; i < points.size(); ++i)
        out << "  " << i << " [label=\"" << vector_label(points[i]) << "\"];\n";
      out << "}\n";
      return out.str();
    }
    case ExportFormat::Svg: {
      std::vector<std::pair<double, double>> positions;
      positions.reserve(points.size());
      for (const auto& v : points) positions.push_back(spec.position(v));
      return svg_document(positions, {});
    }
  }
  return {};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace circle_orbit
