// Copyright 2026 The riemannlab Authors
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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "riemannlab/tent_path.hpp"

using namespace riemannlab;

using RealPath = PiecewiseAffinePath<RealLine>;
using RealSegment = RealPath::Segment;

TEST_CASE("path construction validates its chain") {
  const RealLine s;
  CHECK_THROWS_AS(RealPath(s, {}), std::domain_error);
  CHECK_THROWS_AS(RealPath(s, {{1.0, 1.0, 0.0, 0.0}}), std::domain_error);
  CHECK_THROWS_AS(RealPath(s, {{1.0, 0.0, 0.0, 0.0}}), std::domain_error);
  // Gap between segments.
  CHECK_THROWS_AS(
      RealPath(s, {{0.0, 1.0, 0.0, 2.0}, {1.5, 2.0, 2.0, 0.0}}),
      std::domain_error);
  // Value jump at the shared breakpoint.
  CHECK_THROWS_AS(
      RealPath(s, {{0.0, 1.0, 0.0, 2.0}, {1.0, 2.0, 2.5, 0.0}}),
      std::domain_error);
}

TEST_CASE("path evaluation interpolates and honors breakpoints") {
  const RealPath path(RealLine{},
                      {{0.0, 1.0, 0.0, 2.0}, {1.0, 3.0, 2.0, -4.0}});
  CHECK(path.a() == 0.0);
  CHECK(path.b() == 3.0);
  CHECK(path.evaluate(0.0) == 0.0);
  CHECK(path.evaluate(0.5) == 1.0);
  CHECK(path.evaluate(1.0) == 2.0);  // exactly the stored node
  CHECK(path.evaluate(2.0) == -1.0);
  CHECK(path.evaluate(3.0) == -4.0);
  CHECK_THROWS_AS(path.evaluate(-0.1), std::domain_error);
  CHECK_THROWS_AS(path.evaluate(3.1), std::domain_error);
}

TEST_CASE("cascade path shape") {
  const PolySupSpace s;
  const auto w = extract_fast_cauchy(exp_series_point(), 8);
  const auto path = build_tent_path(s, w, 8);
  CHECK(path.segments().size() == 4 * 8 + 1);
  CHECK(path.a() == -1.0);
  CHECK(path.b() == 1.0);

  // Zero at every block boundary and across the middle plateau.
  for (int n = 0; n <= 8; ++n) {
    CHECK(path.evaluate(std::ldexp(1.0, -n)).is_zero());
    CHECK(path.evaluate(-std::ldexp(1.0, -n)).is_zero());
  }
  CHECK(path.evaluate(0.0).is_zero());
  CHECK(path.evaluate(std::ldexp(1.0, -12)).is_zero());

  // Block peaks are exactly the scaled witness gaps.
  for (unsigned n = 1; n <= 8; ++n) {
    const auto prev = n == 1 ? Polynomial{} : w.elements[n - 2];
    const auto expect = scale(std::ldexp(1.0, static_cast<int>(n) + 1),
                              sub(w.elements[n - 1], prev));
    CHECK(path.evaluate(std::ldexp(3.0, -static_cast<int>(n) - 1)) == expect);
    CHECK(path.evaluate(-std::ldexp(3.0, -static_cast<int>(n) - 1)) ==
          negate(expect));
  }

  // Peak norms collapse like 2^(1-n) once the fast-Cauchy bound kicks in.
  for (unsigned n = 2; n <= 8; ++n) {
    const double peak_norm =
        s.norm(path.evaluate(std::ldexp(3.0, -static_cast<int>(n) - 1)));
    CHECK(peak_norm <= std::ldexp(1.0, 1 - static_cast<int>(n)) * (1 + 1e-9));
  }
}

TEST_CASE("cascade path is odd to rounding") {
  const PolySupSpace s;
  const auto w = extract_fast_cauchy(exp_series_point(), 6);
  const auto path = build_tent_path(s, w, 6);
  for (double x : {0.9, 0.65, 0.3, 0.2, 0.09, 0.04, 0.011}) {
    const auto p = path.evaluate(x);
    const auto q = path.evaluate(-x);
    CHECK(space_distance(s, q, negate(p)) <= 1e-15 * (1.0 + s.norm(p)));
  }
}

TEST_CASE("path integrals telescope through the witness") {
  const PolySupSpace s;
  const auto w = extract_fast_cauchy(exp_series_point(), 10);
  const auto path = build_tent_path(s, w, 10);
  for (unsigned n = 1; n <= 10; ++n) {
    const auto got = path_integral_from_dyadic(path, n);
    CHECK(got == w.elements[n - 1]);  // exact: power-of-two trapezoids
  }
  CHECK_THROWS_AS(path_integral_from_dyadic(path, 0), std::out_of_range);
  CHECK_THROWS_AS(path_integral_from_dyadic(path, 11), std::out_of_range);
}

TEST_CASE("the generic cascade reproduces the built-in map") {
  // Witness x_n = closed-form integral over [2^-n, 1]: the scalar cascade.
  const unsigned depth = 9;
  FastCauchyWitness<PolySupSpace> w;
  for (unsigned n = 1; n <= depth; ++n) {
    w.indices.push_back(n);
    w.elements.push_back(exp_partial(n - 1));
  }
  const PolySupSpace s;
  const auto path = build_tent_path(s, w, depth);
  for (int i = -40; i <= 40; ++i) {
    const double x = i / 40.0;
    const Polynomial want = tent_map(x);
    CHECK(space_distance(s, path.evaluate(x), want) <=
          1e-15 * (1.0 + s.norm(want)));
  }
  // Bitwise at all peaks.
  for (unsigned n = 1; n <= depth; ++n) {
    const double peak = std::ldexp(3.0, -static_cast<int>(n) - 1);
    CHECK(path.evaluate(peak) == tent_map(peak));
  }
}

TEST_CASE("cascade path argument validation") {
  const PolySupSpace s;
  const auto w = extract_fast_cauchy(exp_series_point(), 3);
  CHECK_THROWS_AS(build_tent_path(s, w, 0), std::out_of_range);
  CHECK_THROWS_AS(build_tent_path(s, w, 171), std::out_of_range);
  CHECK_THROWS_AS(build_tent_path(s, w, 4), std::domain_error);
  CHECK(build_tent_path(s, w, 2).segments().size() == 9);
}
