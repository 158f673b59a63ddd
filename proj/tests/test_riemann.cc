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

#include "riemannlab/riemann.hpp"
#include "riemannlab/tent_map.hpp"

using namespace riemannlab;

TEST_CASE("tag rule names") {
  CHECK(tag_rule_name(TagRule::Left) == std::string("left"));
  CHECK(tag_rule_name(TagRule::Random) == std::string("random"));
  for (TagRule r : {TagRule::Left, TagRule::Right, TagRule::Midpoint,
                    TagRule::Random})
    CHECK(parse_tag_rule(tag_rule_name(r)) == r);
  CHECK_THROWS_AS(parse_tag_rule("center"), std::domain_error);
  CHECK_THROWS_AS(parse_tag_rule(""), std::domain_error);
}

TEST_CASE("tagged partition validation") {
  CHECK_NOTHROW(TaggedPartition({0.0, 0.5, 1.0}, {0.25, 0.75}));
  CHECK_THROWS_AS(TaggedPartition({0.0}, {}), std::domain_error);
  CHECK_THROWS_AS(TaggedPartition({0.0, 1.0}, {0.5, 0.6}), std::domain_error);
  CHECK_THROWS_AS(TaggedPartition({0.0, 0.0, 1.0}, {0.0, 0.5}),
                  std::domain_error);
  CHECK_THROWS_AS(TaggedPartition({0.0, 1.0}, {1.5}), std::domain_error);
  CHECK_THROWS_AS(TaggedPartition({0.0, 1.0 / 0.0}, {0.5}), std::domain_error);
}

TEST_CASE("regular partition grid") {
  const auto p = regular_partition(0.0, 1.0, 4, TagRule::Left);
  CHECK(p.size() == 4);
  CHECK(p.a() == 0.0);
  CHECK(p.b() == 1.0);
  CHECK(p.breakpoints() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(p.tags() == std::vector<double>{0.0, 0.25, 0.5, 0.75});

  const auto r = regular_partition(0.0, 1.0, 4, TagRule::Right);
  CHECK(r.tags() == std::vector<double>{0.25, 0.5, 0.75, 1.0});

  const auto m = regular_partition(0.0, 1.0, 4, TagRule::Midpoint);
  CHECK(m.tags() == std::vector<double>{0.125, 0.375, 0.625, 0.875});

  CHECK_THROWS_AS(regular_partition(0.0, 0.0, 4, TagRule::Left),
                  std::domain_error);
  CHECK_THROWS_AS(regular_partition(1.0, 0.0, 4, TagRule::Left),
                  std::domain_error);
  CHECK_THROWS_AS(regular_partition(0.0, 1.0, 0, TagRule::Left),
                  std::out_of_range);
  CHECK_THROWS_AS(
      regular_partition(0.0, 1.0, kMaxSubintervals + 1, TagRule::Left),
      std::out_of_range);
}

TEST_CASE("symmetric intervals mirror bitwise") {
  for (size_t n : {2u, 3u, 7u, 64u, 1001u}) {
    const auto p = regular_partition(-1.0, 1.0, n, TagRule::Midpoint);
    const auto& bp = p.breakpoints();
    const auto& tags = p.tags();
    for (size_t i = 0; i <= n; ++i) CHECK(bp[n - i] == -bp[i]);
    for (size_t i = 0; i < n; ++i) CHECK(tags[n - 1 - i] == -tags[i]);
  }
  // Also on a shifted symmetric range.
  const auto q = regular_partition(-0.375, 0.375, 9, TagRule::Midpoint);
  for (size_t i = 0; i < 9; ++i) CHECK(q.tags()[8 - i] == -q.tags()[i]);
}

TEST_CASE("random tags are reproducible and in range") {
  const auto p = regular_partition(0.0, 1.0, 100, TagRule::Random, 42);
  const auto q = regular_partition(0.0, 1.0, 100, TagRule::Random, 42);
  CHECK(p.tags() == q.tags());
  const auto r = regular_partition(0.0, 1.0, 100, TagRule::Random, 43);
  CHECK(p.tags() != r.tags());
  for (size_t i = 0; i < 100; ++i) {
    CHECK(p.tags()[i] >= p.breakpoints()[i]);
    CHECK(p.tags()[i] <= p.breakpoints()[i + 1]);
  }
}

TEST_CASE("scalar Riemann sums") {
  const RealLine s;
  const auto id = [](double x) { return x; };
  CHECK(riemann_sum(s, id, regular_partition(0.0, 1.0, 8, TagRule::Right)) ==
        0.5625);
  CHECK(riemann_sum(s, id, regular_partition(0.0, 1.0, 8, TagRule::Midpoint)) ==
        0.5);
  CHECK(riemann_sum(s, id, regular_partition(0.0, 1.0, 8, TagRule::Left)) ==
        0.4375);
}

TEST_CASE("constant-direction sums are exact on dyadic grids") {
  const PolySupSpace s;
  const auto graph = [](double x) { return Polynomial({x}); };
  for (size_t n : {1u, 2u, 8u, 64u, 4096u}) {
    const double dn = static_cast<double>(n);
    const auto right =
        riemann_sum(s, graph, regular_partition(0.0, 1.0, n, TagRule::Right));
    CHECK(right == Polynomial({(dn + 1.0) / (2.0 * dn)}));
    const auto mid =
        riemann_sum(s, graph, regular_partition(0.0, 1.0, n, TagRule::Midpoint));
    CHECK(mid == Polynomial({0.5}));
  }
}

TEST_CASE("odd map on mirrored midpoint partitions cancels exactly") {
  const PolySupSpace s;
  const auto f = [](double x) { return tent_map(x); };
  for (size_t n : {2u, 6u, 10u, 64u, 256u}) {
    const auto sum =
        riemann_sum(s, f, regular_partition(-1.0, 1.0, n, TagRule::Midpoint));
    CHECK(sum.is_zero());
  }
  // Odd subinterval counts still cancel: the middle tag is exactly 0.
  const auto odd =
      riemann_sum(s, f, regular_partition(-1.0, 1.0, 9, TagRule::Midpoint));
  CHECK(odd.is_zero());
  // Left grids leave only the boundary tag unpaired, and the map
  // vanishes at -1, so even those sums cancel on [-1, 1].
  const auto lfull =
      riemann_sum(s, f, regular_partition(-1.0, 1.0, 64, TagRule::Left));
  CHECK(lfull.is_zero());
  // On [-0.75, 0.75] the unpaired boundary tag sits on the block-0
  // peak: the left sum keeps exactly that term and the right sum is its
  // exact negation.
  const auto lsum =
      riemann_sum(s, f, regular_partition(-0.75, 0.75, 64, TagRule::Left));
  const auto rsum =
      riemann_sum(s, f, regular_partition(-0.75, 0.75, 64, TagRule::Right));
  CHECK(lsum == Polynomial({-0.09375}));
  CHECK(lsum == negate(rsum));
}

TEST_CASE("riemann sums are deterministic with random tags") {
  const PolySupSpace s;
  const auto f = [](double x) { return tent_map(x); };
  const auto a =
      riemann_sum(s, f, regular_partition(0.0, 1.0, 257, TagRule::Random, 7));
  const auto b =
      riemann_sum(s, f, regular_partition(0.0, 1.0, 257, TagRule::Random, 7));
  CHECK(a == b);
}

TEST_CASE("refinement argument validation") {
  const RealLine s;
  const auto id = [](double x) { return x; };
  const std::vector<size_t> sched = {2, 4, 8};
  CHECK_THROWS_AS(refine_until_cauchy(s, id, 0.0, 1.0, 0.0, sched),
                  std::domain_error);
  CHECK_THROWS_AS(
      refine_until_cauchy(s, id, 0.0, 1.0, 1e-9, std::vector<size_t>{}),
      std::domain_error);
  CHECK_THROWS_AS(refine_until_cauchy(s, id, 0.0, 1.0, 1e-9,
                                      std::vector<size_t>{4, 4}),
                  std::domain_error);
  CHECK_THROWS_AS(refine_until_cauchy(s, id, 0.0, 1.0, 1e-9,
                                      std::vector<size_t>{8, 4}),
                  std::domain_error);
}

TEST_CASE("refinement stops once consecutive sums agree") {
  const PolySupSpace s;
  const auto f = [](double x) { return tent_map(x); };
  // On the symmetric interval every even-N midpoint sum is exactly zero,
  // so the second row already has gap 0.
  const std::vector<size_t> sched = {2, 4, 6, 8};
  const auto report =
      refine_until_cauchy(s, f, -1.0, 1.0, 1e-9, sched, TagRule::Midpoint);
  CHECK(report.verdict == Verdict::CauchyWithinTolerance);
  CHECK(report.rows.size() == 2);
  CHECK(report.rows[0].sum_norm == 0.0);
  CHECK_FALSE(report.rows[0].gap_prev.has_value());
  CHECK(report.rows[1].gap_prev == 0.0);
  CHECK(report.tolerance == 1e-9);
}

TEST_CASE("refinement exhausts its budget on [0, 1]") {
  const PolySupSpace s;
  const auto f = [](double x) { return tent_map(x); };
  const std::vector<size_t> sched = {16, 32, 64, 128};
  const auto report = refine_until_cauchy(s, f, 0.0, 1.0, 1e-12, sched,
                                          TagRule::Midpoint, 0,
                                          std::optional<Polynomial>(exp_partial(40)));
  CHECK(report.verdict == Verdict::BudgetExhausted);
  CHECK(report.rows.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(report.rows[i].n == sched[i]);
    CHECK(report.rows[i].sum_norm > 1.0);
    CHECK(report.rows[i].dist_ref.has_value());
  }
  // Refinement marches toward the escaped limit.
  for (size_t i = 1; i < 4; ++i)
    CHECK(*report.rows[i].dist_ref < *report.rows[i - 1].dist_ref);
}

TEST_CASE("convergence csv shape") {
  ConvergenceReport report;
  report.rows.push_back({2, 0.5, std::nullopt, std::nullopt});
  report.rows.push_back({4, 0.25, 0.125, 1.0});
  CHECK(to_csv(report) ==
        "N,sum_norm,gap_prev,dist_ref\n2,0.5,,\n4,0.25,0.125,1\n");
  CHECK(to_csv(ConvergenceReport{}) == "N,sum_norm,gap_prev,dist_ref\n");
}

TEST_CASE("additivity probe on a safe interval") {
  const auto f = [](double x) { return tent_map(x); };
  const auto report =
      chasles_check(f, exact_integral, 0.25, 0.5, 1.0, 256);
  CHECK(report.n == 256);
  CHECK(report.discrepancy <= 1e-2);
  CHECK(report.total.exact_dist.has_value());
  CHECK(report.left.exact_dist.has_value());
  CHECK(report.right.exact_dist.has_value());
  CHECK(*report.total.exact_dist <= 1e-2);
  CHECK(*report.left.exact_dist <= 1e-2);
  CHECK(*report.right.exact_dist <= 1e-2);
  CHECK(report.left.degree == 1);   // the [1/4, 1/2] piece carries t
  CHECK(report.right.degree == 0);  // the [1/2, 1] piece is constant
}

TEST_CASE("additivity probe across the origin") {
  const auto f = [](double x) { return tent_map(x); };
  const auto report = chasles_check(f, exact_integral, -1.0, 0.0, 1.0, 128);
  // The symmetric total cancels exactly; the halves mirror bitwise.
  CHECK(report.total.sum_norm == 0.0);
  CHECK(report.total.degree == -1);
  CHECK(report.discrepancy == 0.0);
  CHECK(report.total.exact_dist == 0.0);
  // No closed form on either half: the origin is an endpoint.
  CHECK_FALSE(report.left.exact_dist.has_value());
  CHECK_FALSE(report.right.exact_dist.has_value());
  CHECK(report.left.sum_norm == report.right.sum_norm);
  CHECK(report.left.degree == report.right.degree);
  CHECK(report.left.degree >= 5);
}

TEST_CASE("additivity probe argument validation") {
  const auto f = [](double x) { return tent_map(x); };
  CHECK_THROWS_AS(chasles_check(f, exact_integral, 0.0, 0.0, 1.0, 4),
                  std::domain_error);
  CHECK_THROWS_AS(chasles_check(f, exact_integral, 0.5, 0.25, 1.0, 4),
                  std::domain_error);
  CHECK_THROWS_AS(chasles_check(f, exact_integral, 0.25, 0.5, 1.0, 0),
                  std::out_of_range);
  CHECK_THROWS_AS(
      chasles_check(f, exact_integral, 0.25, 0.5, 1.0, kMaxSubintervals),
      std::out_of_range);
}
