// Copyright 2026 The newtb Authors
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

#ifndef NEWTB_IO_HPP
#define NEWTB_IO_HPP

#include <string>
#include <vector>

#include "newtb/building.hpp"
#include "newtb/newton.hpp"
#include "newtb/plfun.hpp"
#include "newtb/ultrametric.hpp"

namespace newtb {

// Canonical text forms.  Every printed value re-parses to an equal
// value; printing is deterministic.
//
//   Rational       "a/b" | "a" | "inf"
//   PLFun          "plfun lo=<r> hi=<r|inf> pts=(x:y;...) tail=<slope>"
//   NewtonPolygon  "newt q=<int> n=<int> slopes=<r>,<r>,..."
//   Vertex         "vtx <c1>,<c2>,..."
//   SimplexB       "simplexB n=<n> b=(b_12,b_13,...,b_{n-1,n})"
//   Roots          "roots m=<int> v=<r;...> d=(i,j:r;...)"

std::string to_text(const PLFun& f);
PLFun parse_plfun(const std::string& text);

std::string to_text(const NewtonPolygon& P);
NewtonPolygon parse_polygon(const std::string& text);

std::string to_text(const ApartmentVertex& x);
ApartmentVertex parse_vertex(const std::string& text);

std::string to_text(const ApartmentPoint& x);

std::string to_text(const SimplexB& S);
SimplexB parse_simplexB(const std::string& text);

std::string to_text(const UltrametricRoots& r);
// Omitted off-diagonal pairs are filled by the ultrametric closure of
// the given ones together with the valuation constraints; an argument
// error is raised when a pair stays undetermined or the data is
// inconsistent.
UltrametricRoots parse_roots(const std::string& text);

// csv/list helpers shared by the CLI surface.
std::vector<Rational> parse_rational_csv(const std::string& text);
std::vector<std::int64_t> parse_int_csv(const std::string& text);
std::string rational_csv(const std::vector<Rational>& v);
std::string int_csv(const std::vector<std::int64_t>& v);

}  // namespace newtb

#endif  // NEWTB_IO_HPP
