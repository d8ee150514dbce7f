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

// circle_orbit_cli: command-line front end over the C API.
//
// Exit codes: 0 ok, 2 invalid input, 3 resource cap, 4 internal error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "circle_orbit/circle_orbit.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int code;
  std::string message;
};

int exit_code(co_status s) {
  switch (s) {
    case CO_OK: return 0;
    case CO_ERR_RESOURCE: return kExitResource;
    case CO_ERR_INTERNAL: return kExitInternal;
    case CO_ERR_INVALID_INPUT:
    case CO_ERR_IO: return kExitInvalid;
  }
  return kExitInternal;
}

void check(co_status s) {
  if (s != CO_OK) throw Failure{exit_code(s), co_last_error_message()};
}

[[noreturn]] void invalid(const std::string& message) { throw Failure{kExitInvalid, message}; }

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PolyPtr = std::unique_ptr<co_poly, Deleter<co_poly, co_poly_free>>;
using TriplePtr = std::unique_ptr<co_triple, Deleter<co_triple, co_triple_free>>;
using SpecPtr = std::unique_ptr<co_spec, Deleter<co_spec, co_spec_free>>;

struct OwnedText {
  char* text = nullptr;
  ~OwnedText() { co_string_free(text); }
};

// Settings shared by all subcommands; unset fields fall back to --config and
// then to defaults.
struct Settings {
  std::optional<std::string> poly, triple, schedule, precision, format, out, abc, base, point;
  std::optional<long long> bound, m_min, m_max;
  std::optional<std::uint64_t> cap;
  std::optional<unsigned> workers, embedding;
  std::optional<int> decimals;
  std::optional<std::string> config;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_file(const std::string& path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

// Fills every unset setting from the JSON config file.
void apply_config(Settings& s) {
  if (!s.config) return;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(*s.config));
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("bad config file: ") + e.what());
  }
  if (!j.is_object()) invalid("config file must hold a JSON object");
  auto text = [&](const char* key, std::optional<std::string>& field) {
    if (field || !j.contains(key)) return;
    const auto& v = j[key];
    field = v.is_string() ? v.get<std::string>() : v.dump();
  };
  try {
    auto number = [&](const char* key, auto& field) {
      if (field || !j.contains(key)) return;
      field = j[key].get<typename std::remove_reference_t<decltype(field)>::value_type>();
    };
    text("poly", s.poly);
    text("triple", s.triple);
    text("precision", s.precision);
    text("format", s.format);
    text("out", s.out);
    text("abc", s.abc);
    text("base", s.base);
    text("point", s.point);
    if (!s.schedule && j.contains("schedule")) {
      const auto& v = j["schedule"];
      if (v.is_array()) {
        std::string joined;
        for (const auto& b : v) joined += (joined.empty() ? "" : ",") + std::to_string(b.get<long long>());
        s.schedule = joined;
      } else {
        s.schedule = v.get<std::string>();
      }
    }
    number("bound", s.bound);
    number("m_min", s.m_min);
    number("m_max", s.m_max);
    number("cap", s.cap);
    number("workers", s.workers);
    number("embedding", s.embedding);
    number("decimals", s.decimals);
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("bad config value: ") + e.what());
  }
}

co_options enumeration_options(const Settings& s) {
  co_options o{co_default_cap(), s.workers.value_or(1)};
  if (s.cap) {
    o.cap = *s.cap;
  } else if (const char* env = std::getenv("CIRCLE_ORBIT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) invalid("CIRCLE_ORBIT_CAP must be a positive integer");
    o.cap = v;
  }
  if (o.cap == 0) invalid("--cap must be positive");
  if (o.workers == 0) invalid("--workers must be positive");
  return o;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

long long to_ll(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    invalid(std::string("bad ") + what + " entry '" + s + "'");
  }
}

PolyPtr load_poly(const Settings& s) {
  if (!s.poly) invalid("--poly is required");
  std::string text = is_file(*s.poly) ? read_file(*s.poly) : *s.poly;
  co_poly* p = nullptr;
  check(co_poly_parse(text.c_str(), &p));
  return PolyPtr(p);
}

TriplePtr load_triple(const Settings& s) {
  if (!s.triple) invalid("--triple is required");
  std::string text = is_file(*s.triple) ? read_file(*s.triple) : *s.triple;
  co_triple* t = nullptr;
  check(co_triple_parse(text.c_str(), &t));
  return TriplePtr(t);
}

SpecPtr load_spec(const Settings& s) {
  co_spec* spec = nullptr;
  if (s.poly && s.triple) invalid("give either --poly or --triple, not both");
  if (s.triple) {
    TriplePtr t = load_triple(s);
    check(co_spec_triple(t.get(), &spec));
  } else {
    PolyPtr p = load_poly(s);
    check(co_spec_ring(p.get(), s.embedding.value_or(0), &spec));
  }
  return SpecPtr(spec);
}

long long require_bound(const Settings& s) {
  if (!s.bound) invalid("--bound is required");
  return *s.bound;
}

const char* precision_or_null(const Settings& s) { return s.precision ? s.precision->c_str() : nullptr; }

void emit(const Settings& s, const OwnedText& result) {
  if (s.out) {
    check(co_write_file(s.out->c_str(), result.text));
  } else {
    std::fwrite(result.text, 1, std::strlen(result.text), stdout);
    std::fflush(stdout);
  }
}

void run(const std::string& command, const Settings& s) {
  OwnedText result;
  co_options opt = enumeration_options(s);
  std::string format = s.format.value_or("");
  auto format_or = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };

  if (command == "analyze") {
    PolyPtr p = load_poly(s);
    check(co_analyze(p.get(), precision_or_null(s), s.decimals.value_or(0), &result.text));
  } else if (command == "orbit") {
    PolyPtr p = load_poly(s);
    check(co_orbit(p.get(), s.m_min.value_or(-25), s.m_max.value_or(25), &opt, &result.text));
  } else if (command == "graph") {
    SpecPtr spec = load_spec(s);
    check(co_graph(spec.get(), require_bound(s), format_or("json").c_str(), &opt, &result.text));
  } else if (command == "circle-points") {
    SpecPtr spec = load_spec(s);
    check(co_circle_points(spec.get(), require_bound(s), format_or("json").c_str(), &opt, &result.text));
  } else if (command == "rank3") {
    TriplePtr t = load_triple(s);
    std::vector<long long> schedule;
    for (const auto& b : split(s.schedule.value_or("10,20,30,40,50"))) schedule.push_back(to_ll(b, "schedule"));
    check(co_rank3(t.get(), schedule.data(), schedule.size(), &opt, &result.text));
  } else if (command == "scan") {
    check(co_scan(s.bound.value_or(3), precision_or_null(s), format_or("csv").c_str(), &opt, &result.text));
  } else if (command == "egyptian") {
    if (s.point) {
      auto parts = split(*s.point);
      if (parts.size() != 3) invalid("--point takes x,y,z");
      check(co_egyptian_point(to_ll(parts[0], "point"), to_ll(parts[1], "point"), to_ll(parts[2], "point"),
                              &result.text));
    } else {
      check(co_egyptian(s.bound.value_or(30), format_or("json").c_str(), &opt, &result.text));
    }
  } else if (command == "case-polys") {
    if (s.triple) {
      TriplePtr t = load_triple(s);
      check(co_case_polys_from_triple(t.get(), s.bound.value_or(50), &opt, &result.text));
    } else {
      if (!s.abc || !s.base) invalid("case-polys needs --triple, or --abc and --base");
      auto abc = split(*s.abc);
      auto base = split(*s.base);
      if (abc.size() != 3 || base.size() != 3) invalid("--abc and --base take three comma-separated values");
      const char* a[3] = {abc[0].c_str(), abc[1].c_str(), abc[2].c_str()};
      const char* b[3] = {base[0].c_str(), base[1].c_str(), base[2].c_str()};
      check(co_case_polys(a, b, &result.text));
    }
  } else {
    invalid("unknown command '" + command + "'");
  }
  emit(s, result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unit-circle orbits and rank-3 finiteness checks"};
  app.require_subcommand(1);
  Settings s;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"analyze", "classify a polynomial"},
      {"orbit", "powers of alpha and their circle verdicts"},
      {"graph", "unit-distance graph on a coefficient box"},
      {"circle-points", "group elements of modulus 1 in a coefficient box"},
      {"rank3", "finiteness report for a triple of inner products"},
      {"scan", "classify z^4 + a z^3 + b z^2 + a z + 1 over a box"},
      {"egyptian", "solutions of 1/x + 1/y + 1/z = 0 and their parameters"},
      {"case-polys", "the polynomials p1, p2 of the two-dimensional case"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--poly", s.poly, "polynomial: JSON array, a,b,c list, or file");
    sub->add_option("--triple", s.triple, "triple JSON text or file");
    sub->add_option("--bound", s.bound, "box bound B");
    sub->add_option("--schedule", s.schedule, "increasing bounds, comma separated");
    sub->add_option("--precision", s.precision, "isolation width as a rational, e.g. 1/1000000");
    sub->add_option("--format", s.format, "json, dot, svg or csv");
    sub->add_option("--out", s.out, "output path (default stdout)");
    sub->add_option("--cap", s.cap, "maximum number of box vectors");
    sub->add_option("--workers", s.workers, "enumeration threads");
    sub->add_option("--config", s.config, "JSON file with defaults for these flags");
    sub->add_option("--m-min", s.m_min, "orbit start (default -25)");
    sub->add_option("--m-max", s.m_max, "orbit end (default 25)");
    sub->add_option("--embedding", s.embedding, "which circle root pair to embed with");
    sub->add_option("--decimals", s.decimals, "also render root enclosures with this many digits");
    sub->add_option("--abc", s.abc, "a,b,c for case-polys");
    sub->add_option("--base", s.base, "alpha0,beta0,gamma0 for case-polys");
    sub->add_option("--point", s.point, "x,y,z for a single egyptian parametrisation");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    apply_config(s);
    run(app.get_subcommands().front()->get_name(), s);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
