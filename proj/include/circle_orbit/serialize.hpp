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

// JSON forms of the domain types. Polynomials are little-endian arrays of
// decimal integer strings; rationals are "num/den" strings; quadratic-field
// scalars are [rational, surd] pairs meaning a + b sqrt(D).

#ifndef CIRCLE_ORBIT_SERIALIZE_HPP
#define CIRCLE_ORBIT_SERIALIZE_HPP

#include <string_view>

#include "json.hpp"

#include "circle_orbit/exact.hpp"
#include "circle_orbit/polyclass.hpp"
#include "circle_orbit/quartic_ring.hpp"
#include "circle_orbit/rank3.hpp"

namespace circle_orbit {

using Json = nlohmann::ordered_json;

Json to_json(const IntPolynomial& p);
Json to_json(const RatPolynomial& p);
Json to_json(const Rational& r);
Json to_json(const RationalInterval& iv);
Json to_json(const ComplexBox& box);
Json to_json(const PolyClassification& c);
Json to_json(const RingElement& e);
Json to_json(const Orbit& o);
Json to_json(const QuadExtScalar& s);
Json to_json(const InnerProductTriple& t);
Json to_json(const EgyptianParam& e);
Json to_json(const CasePolynomials& c);
Json to_json(const Rank3Report& r);

/// Array of integers or decimal strings, or an inline "1,-1,-1,-1,1" list.
IntPolynomial parse_polynomial(std::string_view text);
IntPolynomial polynomial_from_json(const Json& j);
Rational rational_from_json(const Json& j);
/// "3/5", 0.5-style numbers, or [rational, surd].
QuadExtScalar scalar_from_json(const Json& j, const Integer& radicand);
/// {"D": 2, "alpha": ..., "beta": ..., "gamma": ..., "n": 1}; D optional.
InnerProductTriple triple_from_json(const Json& j);
InnerProductTriple parse_triple(std::string_view text);

/// Stable textual dump: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace circle_orbit

#endif  // CIRCLE_ORBIT_SERIALIZE_HPP
