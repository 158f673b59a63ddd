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

#include <vector>

#include "riemannlab/space.hpp"

using namespace riemannlab;

TEST_CASE("real line axioms") {
  const RealLine s;
  const auto r = check_space_axioms(
      s, {0.0, 1.0, -2.5, 1e-8, 3e7, -7.25}, {0.0, 1.0, -1.0, 0.5, -3e3});
  CHECK(r.norm_zero_is_zero);
  CHECK(r.homogeneity);
  CHECK(r.triangle);
  CHECK(r.commutativity);
  CHECK(r.associativity);
  CHECK(r.all());
}

TEST_CASE("polynomial sup-norm space axioms") {
  const PolySupSpace s;
  const std::vector<Polynomial> samples = {
      Polynomial{},
      Polynomial({1.0}),
      Polynomial({0.0, 1.0, -1.0}),
      Polynomial({-0.5, 2.0, 0.25}),
      exp_partial(6),
      Polynomial::monomial(9),
  };
  CHECK(check_space_axioms(s, samples, {0.0, 1.0, -1.0, 2.0, -0.125}).all());
}

namespace {
// Deliberately broken: "norm" keeps the sign, violating homogeneity.
struct SignedLine {
  using Element = double;
  double zero() const { return 0.0; }
  double add(double a, double b) const { return a + b; }
  double scale(double c, double a) const { return c * a; }
  double norm(double a) const { return a; }
};
}  // namespace

TEST_CASE("axiom checker rejects a signed norm") {
  const auto r = check_space_axioms(SignedLine{}, {1.0, -1.0, 2.0}, {-1.0});
  CHECK_FALSE(r.homogeneity);
  CHECK_FALSE(r.all());
}

TEST_CASE("space helpers") {
  const RealLine s;
  CHECK(space_sub(s, 5.0, 3.0) == 2.0);
  CHECK(space_distance(s, 5.0, 3.0) == 2.0);
  CHECK(space_distance(s, 3.0, 5.0) == 2.0);
  CHECK(approx_equal(s, 1.0, 1.0 + 1e-12));
  CHECK_FALSE(approx_equal(s, 1.0, 1.1));
  CHECK(approx_equal(s, 1.0, 1.05, 0.1));

  const PolySupSpace ps;
  CHECK(ps.norm(Polynomial::monomial(4)) == 1.0);
  CHECK(space_distance(ps, exp_partial(3), exp_partial(3)) == 0.0);
  CHECK(approx_equal(ps, exp_partial(40), exp_partial(60), 1e-9));
  CHECK_FALSE(approx_equal(ps, exp_partial(1), exp_partial(2), 1e-9));
}

TEST_CASE("polynomial accumulator is exact and order independent") {
  const PolySupSpace s;

  auto acc = s.accumulator();
  CHECK(acc.total().is_zero());

  acc.add(Polynomial({0.1, 1e16}));
  acc.add(Polynomial({0.2, 1.0}));
  acc.add(Polynomial({-0.1, -1e16}));
  acc.add(Polynomial({-0.2}));
  const Polynomial p = acc.total();
  CHECK(p.coefficient(0) == 0.0);
  CHECK(p.coefficient(1) == 1.0);

  // Reversed insertion gives the bitwise-identical total.
  auto rev = s.accumulator();
  rev.add(Polynomial({-0.2}));
  rev.add(Polynomial({-0.1, -1e16}));
  rev.add(Polynomial({0.2, 1.0}));
  rev.add(Polynomial({0.1, 1e16}));
  CHECK(rev.total() == p);

  // Mixed degrees: short rows only touch the coefficients they carry.
  auto mixed = s.accumulator();
  mixed.add(Polynomial::monomial(5));
  mixed.add(Polynomial({2.0}));
  mixed.add(negate(Polynomial::monomial(5)));
  CHECK(mixed.total() == Polynomial({2.0}));
}

TEST_CASE("real accumulator cancels exactly") {
  const RealLine s;
  auto acc = s.accumulator();
  acc.add(1e100);
  acc.add(-0.3);
  acc.add(-1e100);
  acc.add(0.3);
  CHECK(acc.total() == 0.0);
}
