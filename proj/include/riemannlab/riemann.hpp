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

#ifndef RIEMANNLAB_RIEMANN_HPP_
#define RIEMANNLAB_RIEMANN_HPP_

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riemannlab/polynomial.hpp"
#include "riemannlab/space.hpp"

namespace riemannlab {

// How a tag is chosen inside each subinterval of a regular partition.
enum class TagRule { Left, Right, Midpoint, Random };

const char* tag_rule_name(TagRule rule);
TagRule parse_tag_rule(std::string_view name);

// A partition a = t_0 < ... < t_n = b with one tag per subinterval.
class TaggedPartition {
 public:
  TaggedPartition(std::vector<double> breakpoints, std::vector<double> tags);

  size_t size() const { return tags_.size(); }
  double a() const { return breakpoints_.front(); }
  double b() const { return breakpoints_.back(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& tags() const { return tags_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> tags_;
};

inline constexpr size_t kMaxSubintervals = size_t{1} << 26;

// The n-subinterval regular partition of [a, b].  Breakpoints and
// midpoint tags are assembled so that on symmetric intervals [-b, b] the
// partition mirrors exactly: t_(n-i) == -t_i and (for Midpoint) the tag
// of subinterval n-1-i is the floating-point negation of the tag of
// subinterval i.  Random tags are drawn from a std::mt19937_64 seeded
// with `seed`, so runs are reproducible bit for bit.
TaggedPartition regular_partition(double a, double b, size_t n, TagRule rule,
                                  uint64_t seed = 0);

// The Riemann sum of f over the tagged partition, valued in `space`.
// Spaces that provide an accumulator get error-free coefficient
// summation: the result is independent of term order, and a term set that
// cancels exactly (an odd map on a mirrored partition) sums to the zero
// element exactly.
template <NormedSpace S, typename F>
  requires std::invocable<F&, double> &&
           std::convertible_to<std::invoke_result_t<F&, double>,
                               typename S::Element>
typename S::Element riemann_sum(const S& space, F&& f,
                                const TaggedPartition& partition) {
  const auto& bp = partition.breakpoints();
  const auto& tags = partition.tags();
  if constexpr (requires(const S& s) { s.accumulator(); }) {
    auto acc = space.accumulator();
    for (size_t i = 0; i < tags.size(); ++i)
      acc.add(space.scale(bp[i + 1] - bp[i], f(tags[i])));
    return acc.total();
  } else {
    auto total = space.zero();
    for (size_t i = 0; i < tags.size(); ++i)
      total = space.add(total, space.scale(bp[i + 1] - bp[i], f(tags[i])));
    return total;
  }
}

// One refinement step of a convergence study.
struct ConvergenceRow {
  size_t n = 0;                    // subintervals
  double sum_norm = 0.0;           // norm of the Riemann sum
  std::optional<double> gap_prev;  // distance to the previous row's sum
  std::optional<double> dist_ref;  // distance to the reference element
};

enum class Verdict { CauchyWithinTolerance, BudgetExhausted };

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  Verdict verdict = Verdict::BudgetExhausted;
  double tolerance = 0.0;
};

// CSV with header "N,sum_norm,gap_prev,dist_ref"; optional cells are left
// empty; LF line endings; shortest round-trip number formatting.
std::string to_csv(const ConvergenceReport& report);

// Runs Riemann sums over the given refinement schedule until two
// consecutive sums are within `tol` of each other, or the schedule runs
// out.  `reference` (when given) adds a distance-to-reference column.
template <NormedSpace S, typename F>
  requires std::invocable<F&, double> &&
           std::convertible_to<std::invoke_result_t<F&, double>,
                               typename S::Element>
ConvergenceReport refine_until_cauchy(
    const S& space, F&& f, double a, double b, double tol,
    std::span<const size_t> schedule, TagRule rule = TagRule::Midpoint,
    uint64_t seed = 0,
    const std::optional<typename S::Element>& reference = std::nullopt) {
  if (!(tol > 0.0))
    throw std::domain_error("refinement tolerance must be positive");
  if (schedule.empty())
    throw std::domain_error("refinement schedule must be nonempty");
  for (size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::domain_error("refinement schedule must strictly increase");

  ConvergenceReport report;
  report.tolerance = tol;
  std::optional<typename S::Element> prev;
  for (size_t n : schedule) {
    auto sum = riemann_sum(space, f, regular_partition(a, b, n, rule, seed));
    ConvergenceRow row;
    row.n = n;
    row.sum_norm = space.norm(sum);
    if (prev) row.gap_prev = space_distance(space, sum, *prev);
    if (reference) row.dist_ref = space_distance(space, sum, *reference);
    report.rows.push_back(row);
    prev = std::move(sum);
    if (row.gap_prev && *row.gap_prev <= tol) {
      report.verdict = Verdict::CauchyWithinTolerance;
      break;
    }
  }
  return report;
}

// One side of an interval-additivity probe.
struct ChaslesPiece {
  double sum_norm = 0.0;
  int degree = -1;
  // Distance to the closed-form integral, absent when no closed form
  // exists on that interval.
  std::optional<double> exact_dist;
};

// Compares the Riemann sum over [a, b] (2n subintervals) against the sum
// of the sums over [a, c] and [c, b] (n subintervals each).
struct ChaslesReport {
  size_t n = 0;
  // norm(total - (left + right)): how badly additivity fails at this
  // resolution.
  double discrepancy = 0.0;
  ChaslesPiece total;
  ChaslesPiece left;
  ChaslesPiece right;
};

ChaslesReport chasles_check(
    const std::function<Polynomial(double)>& f,
    const std::function<std::optional<Polynomial>(double, double)>& exact,
    double a, double c, double b, size_t n, TagRule rule = TagRule::Midpoint,
    uint64_t seed = 0);

}  // namespace riemannlab

#endif  // RIEMANNLAB_RIEMANN_HPP_
