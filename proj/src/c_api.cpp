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

#include "circle_orbit/circle_orbit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "circle_orbit/commands.hpp"

using namespace circle_orbit;

struct co_poly {
  IntPolynomial value;
};
struct co_ring {
  ModulusPtr value;
};
struct co_element {
  RingElement value;
};
struct co_triple {
  InnerProductTriple value;
};
struct co_spec {
  GroupSpec value;
};

namespace {

thread_local std::string last_error;

co_status fail(co_status status, const char* what) {
  last_error = what;
  return status;
}

template <class F>
co_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return CO_OK;
  } catch (const InvalidInput& e) {
    return fail(CO_ERR_INVALID_INPUT, e.what());
  } catch (const ResourceLimit& e) {
    return fail(CO_ERR_RESOURCE, e.what());
  } catch (const IoError& e) {
    return fail(CO_ERR_IO, e.what());
  } catch (const InvariantViolation& e) {
    return fail(CO_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CO_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(CO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CO_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw InvalidInput(std::string(name) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
co_status text_result(char** out, F&& f) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(f());
  });
}

EnumerationOptions options_from(const co_options* opt) {
  EnumerationOptions o;
  if (opt != nullptr) {
    if (opt->cap != 0) o.cap = opt->cap;
    o.workers = opt->workers == 0 ? 1 : opt->workers;
  }
  return o;
}

Rational precision_from(const char* text) {
  if (text == nullptr) return default_precision();
  Rational w = parse_rational(text);
  if (w <= 0) throw InvalidInput("precision must be positive");
  return w;
}

}  // namespace

extern "C" {

const char* co_version(void) { return "0.1.0"; }

const char* co_last_error_message(void) { return last_error.c_str(); }

void co_string_free(char* s) { std::free(s); }

uint64_t co_default_cap(void) { return EnumerationOptions::kDefaultCap; }

co_status co_poly_parse(const char* text, co_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new co_poly{parse_polynomial(text)};
  });
}

void co_poly_free(co_poly* p) { delete p; }

co_status co_poly_to_json(const co_poly* p, char** out) {
  return text_result(out, [&] {
    require(p, "poly");
    return to_json(p->value).dump();
  });
}

co_status co_ring_create(const co_poly* q, co_ring** out) {
  return guarded([&] {
    require(q, "poly");
    require(out, "out");
    *out = new co_ring{RingModulus::create(q->value)};
  });
}

void co_ring_free(co_ring* r) { delete r; }

co_status co_ring_power(const co_ring* r, long long m, co_element** out) {
  return guarded([&] {
    require(r, "ring");
    require(out, "out");
    *out = new co_element{power(r->value, m)};
  });
}

co_status co_element_create(const co_ring* r, const long long* coeffs, size_t count, co_element** out) {
  return guarded([&] {
    require(r, "ring");
    require(out, "out");
    if (count > 0) require(coeffs, "coeffs");
    std::vector<Integer> v;
    for (size_t i = 0; i < count; ++i) v.push_back(to_integer(coeffs[i]));
    *out = new co_element{RingElement(r->value, std::move(v))};
  });
}

void co_element_free(co_element* e) { delete e; }

co_status co_element_mul(const co_element* a, const co_element* b, co_element** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new co_element{ring_mul(a->value, b->value)};
  });
}

co_status co_element_to_json(const co_element* e, char** out) {
  return text_result(out, [&] {
    require(e, "element");
    return to_json(e->value).dump();
  });
}

co_status co_element_on_unit_circle(const co_element* e, int* on_circle, int* exact) {
  return guarded([&] {
    require(e, "element");
    require(on_circle, "on_circle");
    CircleVerdict v = on_unit_circle(e->value);
    *on_circle = v.on_circle ? 1 : 0;
    if (exact != nullptr) *exact = v.exact ? 1 : 0;
  });
}

co_status co_triple_parse(const char* json, co_triple** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new co_triple{parse_triple(json)};
  });
}

void co_triple_free(co_triple* t) { delete t; }

co_status co_spec_ring(const co_poly* q, size_t embedding, co_spec** out) {
  return guarded([&] {
    require(q, "poly");
    require(out, "out");
    *out = new co_spec{GroupSpec::ring(q->value, embedding)};
  });
}

co_status co_spec_triple(const co_triple* t, co_spec** out) {
  return guarded([&] {
    require(t, "triple");
    require(out, "out");
    *out = new co_spec{GroupSpec::triple(t->value)};
  });
}

void co_spec_free(co_spec* s) { delete s; }

co_status co_spec_dimension(const co_spec* s, int* out) {
  return guarded([&] {
    require(s, "spec");
    require(out, "out");
    *out = s->value.dimension();
  });
}

co_status co_degree_of_origin(const co_spec* s, long long bound, const co_options* opt, size_t* out) {
  return guarded([&] {
    require(s, "spec");
    require(out, "out");
    *out = degree_of_origin(s->value, bound, options_from(opt));
  });
}

co_status co_analyze(const co_poly* q, const char* precision, int decimals, char** out) {
  return text_result(out, [&] {
    require(q, "poly");
    return cmd_analyze(q->value, precision_from(precision), decimals);
  });
}

co_status co_orbit(const co_poly* q, long long m_min, long long m_max, const co_options* opt, char** out) {
  return text_result(out, [&] {
    require(q, "poly");
    return cmd_orbit(q->value, m_min, m_max, options_from(opt));
  });
}

co_status co_graph(const co_spec* s, long long bound, const char* format, const co_options* opt, char** out) {
  return text_result(out, [&] {
    require(s, "spec");
    return cmd_graph(s->value, bound, parse_export_format(format ? format : "json"), options_from(opt));
  });
}

co_status co_circle_points(const co_spec* s, long long bound, const char* format, const co_options* opt,
                           char** out) {
  return text_result(out, [&] {
    require(s, "spec");
    return cmd_circle_points(s->value, bound, parse_export_format(format ? format : "json"), options_from(opt));
  });
}

co_status co_rank3(const co_triple* t, const long long* schedule, size_t count, const co_options* opt, char** out) {
  return text_result(out, [&] {
    require(t, "triple");
    if (count > 0) require(schedule, "schedule");
    return cmd_rank3(t->value, std::vector<long long>(schedule, schedule + count), options_from(opt));
  });
}

co_status co_scan(long long bound, const char* precision, const char* format, const co_options* opt, char** out) {
  return text_result(out, [&] {
    return cmd_scan(bound, precision_from(precision), parse_table_format(format ? format : "csv"),
                    options_from(opt));
  });
}

co_status co_egyptian(long long bound, const char* format, const co_options* opt, char** out) {
  return text_result(out, [&] {
    return cmd_egyptian(bound, parse_table_format(format ? format : "json"), options_from(opt));
  });
}

co_status co_egyptian_point(long long x, long long y, long long z, char** out) {
  return text_result(out, [&] { return cmd_egyptian_point(x, y, z); });
}

co_status co_case_polys(const char* const abc[3], const char* const base[3], char** out) {
  return text_result(out, [&] {
    require(abc, "abc");
    require(base, "base");
    std::array<Integer, 3> a;
    std::array<Rational, 3> b;
    for (int i = 0; i < 3; ++i) {
      require(abc[i], "abc entry");
      require(base[i], "base entry");
      a[static_cast<std::size_t>(i)] = parse_integer(abc[i]);
      b[static_cast<std::size_t>(i)] = parse_rational(base[i]);
    }
    return cmd_case_polys(a, b);
  });
}

co_status co_case_polys_from_triple(const co_triple* t, long long bound, const co_options* opt, char** out) {
  return text_result(out, [&] {
    require(t, "triple");
    return cmd_case_polys(t->value, bound, options_from(opt));
  });
}

co_status co_write_file(const char* path, const char* text) {
  return guarded([&] {
    require(path, "path");
    require(text, "text");
    write_file(path, text);
  });
}

}  // extern "C"
