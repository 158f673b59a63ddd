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
#include <limits>
#include <stdexcept>

#include "riemannlab/space.hpp"
#include "riemannlab/tent_map.hpp"

using namespace riemannlab;

TEST_CASE("dyadic blocks") {
  const DyadicBlock b0{0};
  CHECK(b0.lo() == 0.5);
  CHECK(b0.hi() == 1.0);
  CHECK(b0.peak() == 0.75);
  CHECK(b0.half_width() == 0.25);

  const DyadicBlock b3{3};
  CHECK(b3.lo() == 0.0625);
  CHECK(b3.hi() == 0.125);
  CHECK(b3.peak() == 0.09375);
  CHECK(b3.half_width() == 0.03125);
  CHECK(b3.peak() == b3.lo() + b3.half_width());
}

TEST_CASE("block index") {
  CHECK(block_index(1.0) == 0);
  CHECK(block_index(0.75) == 0);
  CHECK(block_index(0.5) == 1);  // dyadic point belongs to the lower block
  CHECK(block_index(0.3) == 1);
  CHECK(block_index(0.25) == 2);
  CHECK(block_index(std::ldexp(1.0, -5)) == 5);
  CHECK(block_index(std::ldexp(1.5, -6)) == 5);
  CHECK(block_index(std::ldexp(1.0, -170)) == 170);

  CHECK_THROWS_AS(block_index(0.0), std::domain_error);
  CHECK_THROWS_AS(block_index(-0.3), std::domain_error);
  CHECK_THROWS_AS(block_index(1.5), std::domain_error);
  CHECK_THROWS_AS(block_index(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("tent scale and peak") {
  CHECK(tent_scale(0) == 16.0);
  CHECK(tent_scale(1) == 64.0);
  CHECK(tent_scale(2) == 128.0);
  CHECK(tent_peak_value(0) == 4.0);
  CHECK(tent_peak_value(1) == 8.0);
  CHECK(tent_peak_value(2) == 8.0);
  CHECK(tent_scale(4) == 4096.0 / 24.0);
  for (unsigned n = 0; n <= 170; ++n)
    CHECK(tent_peak_value(n) == tent_scale(n) * DyadicBlock{n}.half_width());
  for (unsigned n = 2; n <= 60; ++n)
    CHECK(tent_peak_value(n + 1) < tent_peak_value(n));
  CHECK_THROWS_AS(tent_scale(171), std::out_of_range);
  CHECK_THROWS_AS(tent_peak_value(171), std::out_of_range);
}

TEST_CASE("tent coefficient") {
  for (unsigned n : {0u, 1u, 5u, 30u}) {
    const DyadicBlock b{n};
    CHECK(tent_coefficient(n, b.lo()) == 0.0);
    CHECK(tent_coefficient(n, b.hi()) == 0.0);
    CHECK(tent_coefficient(n, b.peak()) == tent_peak_value(n));
    const double quarter = b.lo() + 0.5 * b.half_width();
    CHECK(tent_coefficient(n, quarter) == 0.5 * tent_peak_value(n));
  }
  CHECK(tent_coefficient(1, 0.28) == doctest::Approx(64.0 * 0.03).epsilon(1e-14));
  CHECK_THROWS_AS(tent_coefficient(1, 0.6), std::domain_error);
  CHECK_THROWS_AS(tent_coefficient(171, 1e-60), std::out_of_range);
}

TEST_CASE("tent map structure") {
  const Polynomial p = tent_map(0.3);
  CHECK(p.degree() == 1);
  CHECK(p.coefficient(1) == tent_coefficient(1, 0.3));
  CHECK(p.coefficient(0) == 0.0);

  CHECK(tent_map(DyadicBlock{7}.peak()).coefficient(7) == tent_peak_value(7));
  CHECK(tent_map(0.0).is_zero());
  CHECK(tent_map(1.0).is_zero());
  CHECK(tent_map(std::ldexp(1.0, -200)).is_zero());
  CHECK(tent_map(std::ldexp(1.0, -171)).is_zero());
  CHECK_FALSE(tent_map(std::ldexp(3.0, -172)).is_zero());  // peak of I_170

  CHECK_THROWS_AS(tent_map(1.0000001), std::domain_error);
  CHECK_THROWS_AS(tent_map(-2.0), std::domain_error);
  CHECK_THROWS_AS(tent_map(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("tent map is exactly odd") {
  for (double x : {0.3, 0.75, 0.0625, 0.11, 1e-20, DyadicBlock{9}.peak()}) {
    CHECK(tent_map(-x) == negate(tent_map(x)));
    CHECK(tent_map(-x).coefficient(block_index(x)) ==
          -tent_map(x).coefficient(block_index(x)));
  }
}

TEST_CASE("tent map vanishes at every dyadic point") {
  for (int m = 0; m <= 40; ++m) {
    CHECK(tent_map(std::ldexp(1.0, -m)).is_zero());
    CHECK(tent_map(-std::ldexp(1.0, -m)).is_zero());
  }
}

TEST_CASE("surface value") {
  CHECK(surface_value(0.3, 0.5) == tent_map(0.3).eval(0.5));
  CHECK(surface_value(0.75, 0.0) == 4.0);  // block-0 peak carries t^0
  CHECK(surface_value(-0.75, 1.0) == -4.0);
  CHECK(surface_value(0.0, 0.5) == 0.0);
  CHECK_THROWS_AS(surface_value(0.3, -0.1), std::domain_error);
  CHECK_THROWS_AS(surface_value(0.3, 1.1), std::domain_error);
}

TEST_CASE("block integral") {
  CHECK(block_integral(0) == Polynomial({1.0}));
  CHECK(block_integral(1) == Polynomial::monomial(1));
  CHECK(block_integral(4).degree() == 4);
  CHECK(block_integral(4).coefficient(4) == inverse_factorials()[4]);
  CHECK(block_integral(4).coefficient(3) == 0.0);
  CHECK_THROWS_AS(block_integral(171), std::out_of_range);

  // The generic [a, b] route over one full block reproduces it bitwise.
  for (unsigned n : {0u, 1u, 3u, 10u, 100u, 170u}) {
    const DyadicBlock b{n};
    CHECK(integral_on(b.lo(), b.hi()) == block_integral(n));
  }
}

TEST_CASE("integral from a matches the running exponential series") {
  for (unsigned n = 0; n <= 170; ++n)
    CHECK(integral_from(std::ldexp(1.0, -static_cast<int>(n) - 1)) ==
          exp_partial(n));
  CHECK(integral_from(1.0).is_zero());
  CHECK(integral_from(1e-80) == exp_partial(170));
  CHECK(integral_from(std::ldexp(1.0, -300)) == exp_partial(170));

  // Starting at the peak of block 2 keeps exactly half of that block.
  const Polynomial p = integral_from(DyadicBlock{2}.peak());
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(0) == 1.0);
  CHECK(p.coefficient(1) == 1.0);
  CHECK(p.coefficient(2) == 0.5 * inverse_factorials()[2]);

  CHECK_THROWS_AS(integral_from(0.0), std::domain_error);
  CHECK_THROWS_AS(integral_from(-0.1), std::domain_error);
  CHECK_THROWS_AS(integral_from(1.1), std::domain_error);
}

TEST_CASE("integral over a segment") {
  CHECK(integral_on(0.25, 0.25).is_zero());
  CHECK(integral_on(0.5, 1.0) == Polynomial({1.0}));

  // Same-block segment straddling the peak of I_1.
  const Polynomial p = integral_on(0.3, 0.4);
  CHECK(p.degree() == 1);
  CHECK(p.coefficient(1) == doctest::Approx(0.6).epsilon(1e-14));

  CHECK(integral_on(std::ldexp(1.0, -300), 1.0) == exp_partial(170));

  CHECK_THROWS_AS(integral_on(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(integral_on(0.5, 0.25), std::domain_error);
  CHECK_THROWS_AS(integral_on(0.5, 1.25), std::domain_error);
}

TEST_CASE("the two closed-form routes agree") {
  const PolySupSpace s;
  for (double a : {0.7, 0.5, 0.3, 0.11, 0.0625, 0.01, 1e-6}) {
    CHECK(space_distance(s, integral_on(a, 1.0), integral_from(a)) <= 1e-12);
    // Additivity at an interior cut.
    const double c = a + 0.5 * (1.0 - a);
    const Polynomial glued = add(integral_on(a, c), integral_on(c, 1.0));
    CHECK(space_distance(s, glued, integral_from(a)) <= 1e-12);
  }
}

TEST_CASE("exact integral") {
  CHECK(exact_integral(0.0, 0.0).has_value());
  CHECK(exact_integral(0.0, 0.0)->is_zero());
  CHECK_FALSE(exact_integral(0.0, 0.5).has_value());
  CHECK_FALSE(exact_integral(-0.5, 0.0).has_value());

  CHECK(*exact_integral(0.25, 0.75) == integral_on(0.25, 0.75));
  CHECK(*exact_integral(-0.75, -0.25) == negate(integral_on(0.25, 0.75)));
  CHECK(exact_integral(-1.0, 1.0)->is_zero());
  CHECK(exact_integral(-0.3, 0.3)->is_zero());
  CHECK(*exact_integral(-0.25, 0.75) == integral_on(0.25, 0.75));
  CHECK(*exact_integral(-0.75, 0.25) == negate(integral_on(0.25, 0.75)));

  CHECK_THROWS_AS(exact_integral(0.5, 0.25), std::domain_error);
  CHECK_THROWS_AS(exact_integral(-1.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(exact_integral(0.5, 1.5), std::domain_error);
}
