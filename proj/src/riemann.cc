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

#include "riemannlab/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "riemannlab/numfmt.hpp"

namespace riemannlab {

const char* tag_rule_name(TagRule rule) {
  switch (rule) {
    case TagRule::Left:
      return "left";
    case TagRule::Right:
      return "right";
    case TagRule::Midpoint:
      return "midpoint";
    case TagRule::Random:
      return "random";
  }
  throw std::domain_error("unknown tag rule");
}

TagRule parse_tag_rule(std::string_view name) {
  if (name == "left") return TagRule::Left;
  if (name == "right") return TagRule::Right;
  if (name == "midpoint") return TagRule::Midpoint;
  if (name == "random") return TagRule::Random;
  throw std::domain_error("unknown tag rule name");
}

TaggedPartition::TaggedPartition(std::vector<double> breakpoints,
                                 std::vector<double> tags)
    : breakpoints_(std::move(breakpoints)), tags_(std::move(tags)) {
  if (breakpoints_.size() < 2)
    throw std::domain_error("partition requires at least two breakpoints");
  if (tags_.size() + 1 != breakpoints_.size())
    throw std::domain_error("partition requires one tag per subinterval");
  for (double t : breakpoints_)
    if (!std::isfinite(t))
      throw std::domain_error("partition breakpoints must be finite");
  for (size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw std::domain_error("partition breakpoints must strictly increase");
  for (size_t i = 0; i < tags_.size(); ++i)
    if (!(tags_[i] >= breakpoints_[i]) || !(tags_[i] <= breakpoints_[i + 1]))
      throw std::domain_error("partition tags must lie in their subinterval");
}

TaggedPartition regular_partition(double a, double b, size_t n, TagRule rule,
                                  uint64_t seed) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw std::domain_error("regular_partition requires finite a < b");
  if (n < 1 || n > kMaxSubintervals)
    throw std::out_of_range("subinterval count out of range");
  const double w = b - a;
  const double dn = static_cast<double>(n);
  std::vector<double> bp(n + 1);
  bp[0] = a;
  bp[n] = b;
  // Two mirrored forms so that on [-b, b] the grid satisfies
  // t_(n-i) == -t_i bitwise.
  for (size_t i = 1; i < n; ++i)
    bp[i] = 2 * i <= n ? a + (static_cast<double>(i) * w) / dn
                       : b - (static_cast<double>(n - i) * w) / dn;

  std::vector<double> tags(n);
  switch (rule) {
    case TagRule::Left:
      for (size_t i = 0; i < n; ++i) tags[i] = bp[i];
      break;
    case TagRule::Right:
      for (size_t i = 0; i < n; ++i) tags[i] = bp[i + 1];
      break;
    case TagRule::Midpoint: {
      // Signed offset from the interval center; the offsets of mirrored
      // subintervals are exact negations of each other.
      const double center = 0.5 * (a + b);
      for (size_t i = 0; i < n; ++i)
        tags[i] =
            center + ((2.0 * static_cast<double>(i) + 1.0 - dn) * w) / (2.0 * dn);
      break;
    }
    case TagRule::Random: {
      std::mt19937_64 rng(seed);
      for (size_t i = 0; i < n; ++i) {
        // 53 uniform bits; identical streams on every platform.
        const double u =
            static_cast<double>(rng() >> 11) * 0x1.0p-53;
        tags[i] = bp[i] + u * (bp[i + 1] - bp[i]);
      }
      break;
    }
  }
  for (size_t i = 0; i < n; ++i)
    tags[i] = std::min(std::max(tags[i], bp[i]), bp[i + 1]);
  return TaggedPartition(std::move(bp), std::move(tags));
}

std::string to_csv(const ConvergenceReport& report) {
  std::string out = "N,sum_norm,gap_prev,dist_ref\n";
  for (const ConvergenceRow& row : report.rows) {
    out += format_u64(row.n);
    out += ',';
    out += format_double(row.sum_norm);
    out += ',';
    if (row.gap_prev) out += format_double(*row.gap_prev);
    out += ',';
    if (row.dist_ref) out += format_double(*row.dist_ref);
    out += '\n';
  }
  return out;
}

namespace {

ChaslesPiece make_piece(
    const PolySupSpace& space, const Polynomial& sum,
    const std::function<std::optional<Polynomial>(double, double)>& exact,
    double lo, double hi) {
  ChaslesPiece piece;
  piece.sum_norm = space.norm(sum);
  piece.degree = sum.degree();
  if (exact) {
    if (std::optional<Polynomial> closed = exact(lo, hi))
      piece.exact_dist = space_distance(space, sum, *closed);
  }
  return piece;
}

}  // namespace

ChaslesReport chasles_check(
    const std::function<Polynomial(double)>& f,
    const std::function<std::optional<Polynomial>(double, double)>& exact,
    double a, double c, double b, size_t n, TagRule rule, uint64_t seed) {
  if (!(a < c) || !(c < b))
    throw std::domain_error("chasles_check requires a < c < b");
  if (n < 1 || 2 * n > kMaxSubintervals)
    throw std::out_of_range("subinterval count out of range");
  const PolySupSpace space;
  const Polynomial total =
      riemann_sum(space, f, regular_partition(a, b, 2 * n, rule, seed));
  const Polynomial left =
      riemann_sum(space, f, regular_partition(a, c, n, rule, seed));
  const Polynomial right =
      riemann_sum(space, f, regular_partition(c, b, n, rule, seed));

  ChaslesReport report;
  report.n = n;
  report.discrepancy =
      space.norm(space_sub(space, total, space.add(left, right)));
  report.total = make_piece(space, total, exact, a, b);
  report.left = make_piece(space, left, exact, a, c);
  report.right = make_piece(space, right, exact, c, b);
  return report;
}

}  // namespace riemannlab
