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

#ifndef RIEMANNLAB_TENT_PATH_HPP_
#define RIEMANNLAB_TENT_PATH_HPP_

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "riemannlab/completion.hpp"
#include "riemannlab/space.hpp"
#include "riemannlab/tent_map.hpp"

namespace riemannlab {

// ---------------------------------------------------------------------------
// Vector-valued piecewise-affine paths.
//
// tent_map hard-codes one cascade into one space.  The same mechanism
// works in any normed space that has a fast-Cauchy sequence without a
// limit: string tents between consecutive witness elements and the path's
// partial integrals walk the sequence.  PiecewiseAffinePath is the
// generic carrier; build_tent_path produces the cascade for a witness.
// ---------------------------------------------------------------------------

template <NormedSpace S>
class PiecewiseAffinePath {
 public:
  using Element = typename S::Element;

  // Affine piece on [lo, hi] from vlo to vhi.
  struct Segment {
    double lo;
    double hi;
    Element vlo;
    Element vhi;
  };

  // Requires a nonempty, contiguous, strictly ordered chain whose shared
  // endpoints carry exactly equal values (norm of the difference must be
  // zero; build functions satisfy this by passing the same element).
  PiecewiseAffinePath(S space, std::vector<Segment> segments)
      : space_(std::move(space)), segments_(std::move(segments)) {
    if (segments_.empty())
      throw std::domain_error("path requires at least one segment");
    for (size_t i = 0; i < segments_.size(); ++i) {
      const Segment& s = segments_[i];
      if (!(s.lo < s.hi))
        throw std::domain_error("path segment endpoints must increase");
      if (i == 0) continue;
      const Segment& p = segments_[i - 1];
      if (s.lo != p.hi)
        throw std::domain_error("path segments must be contiguous");
      if (space_.norm(space_sub(space_, s.vlo, p.vhi)) != 0.0)
        throw std::domain_error("path segments must agree at breakpoints");
    }
  }

  double a() const { return segments_.front().lo; }
  double b() const { return segments_.back().hi; }
  const S& space() const { return space_; }
  const std::vector<Segment>& segments() const { return segments_; }

  // Value at x.  A shared breakpoint evaluates on its right-hand segment,
  // so breakpoints return the stored node elements exactly.
  Element evaluate(double x) const {
    if (!(x >= a()) || x > b())
      throw std::domain_error("path evaluated outside its interval");
    size_t idx = locate(x);
    const Segment& s = segments_[idx];
    const double t = (x - s.lo) / (s.hi - s.lo);
    return space_.add(s.vlo,
                      space_.scale(t, space_sub(space_, s.vhi, s.vlo)));
  }

 private:
  size_t locate(double x) const {
    // Last segment whose lo does not exceed x.
    auto it = std::upper_bound(
        segments_.begin(), segments_.end(), x,
        [](double v, const Segment& s) { return v < s.lo; });
    return static_cast<size_t>(it - segments_.begin()) - 1;
  }

  S space_;
  std::vector<Segment> segments_;
};

// The cascade path on [-1, 1] for a fast-Cauchy witness: on the block
// [2^-n, 2^-(n-1)] (n = 1..depth) an element-valued tent rising from zero
// to 2^(n+1) * (x_n - x_(n-1)) at the midpoint 3*2^-(n+1) and back, with
// x_0 = zero; zero across [-2^-depth, 2^-depth]; odd reflection on the
// negative side.  Each block integrates to exactly x_n - x_(n-1), so the
// integral over [2^-n, 1] telescopes to x_n, and peak norms shrink like
// 2^(n+1) * 2^(-2n).
template <NormedSpace S>
PiecewiseAffinePath<S> build_tent_path(const S& space,
                                       const FastCauchyWitness<S>& witness,
                                       unsigned depth) {
  if (depth < 1 || depth > kMaxBlock)
    throw std::out_of_range("path depth must be in [1, 170]");
  if (witness.depth() < depth)
    throw std::domain_error("witness is shallower than the requested depth");
  using Path = PiecewiseAffinePath<S>;
  using Segment = typename Path::Segment;

  const auto zero = space.zero();
  std::vector<typename S::Element> peaks;  // peaks[n-1] for block n
  peaks.reserve(depth);
  for (unsigned n = 1; n <= depth; ++n) {
    const auto& prev = n == 1 ? zero : witness.elements[n - 2];
    peaks.push_back(space.scale(
        std::ldexp(1.0, static_cast<int>(n) + 1),
        space_sub(space, witness.elements[n - 1], prev)));
  }

  std::vector<Segment> segs;
  segs.reserve(4 * depth + 1);
  // Negative side, left to right: blocks n = 1 (outermost) .. depth.
  for (unsigned n = 1; n <= depth; ++n) {
    const double lo = -std::ldexp(1.0, -static_cast<int>(n) + 1);
    const double mid = -std::ldexp(3.0, -static_cast<int>(n) - 1);
    const double hi = -std::ldexp(1.0, -static_cast<int>(n));
    const auto neg_peak = space.scale(-1.0, peaks[n - 1]);
    segs.push_back(Segment{lo, mid, zero, neg_peak});
    segs.push_back(Segment{mid, hi, neg_peak, zero});
  }
  const double inner = std::ldexp(1.0, -static_cast<int>(depth));
  segs.push_back(Segment{-inner, inner, zero, zero});
  // Positive side: blocks n = depth (innermost) .. 1.
  for (unsigned n = depth; n >= 1; --n) {
    const double lo = std::ldexp(1.0, -static_cast<int>(n));
    const double mid = std::ldexp(3.0, -static_cast<int>(n) - 1);
    const double hi = std::ldexp(1.0, -static_cast<int>(n) + 1);
    segs.push_back(Segment{lo, mid, zero, peaks[n - 1]});
    segs.push_back(Segment{mid, hi, peaks[n - 1], zero});
  }
  return Path(space, std::move(segs));
}

// Exact integral of a piecewise-affine path over [2^-n, b] (n >= 1),
// folded as trapezoids; throws if 2^-n is not a breakpoint of the path.
// For cascade paths this telescopes to the witness element x_n.
template <NormedSpace S>
typename S::Element path_integral_from_dyadic(
    const PiecewiseAffinePath<S>& path, unsigned n) {
  if (n < 1) throw std::out_of_range("dyadic index must be at least 1");
  const double start = std::ldexp(1.0, -static_cast<int>(n));
  const auto& segs = path.segments();
  size_t first = segs.size();
  for (size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].lo == start) {
      first = i;
      break;
    }
  }
  if (first == segs.size())
    throw std::out_of_range("2^-n is not a breakpoint of the path");
  const S& space = path.space();
  auto total = space.zero();
  for (size_t i = first; i < segs.size(); ++i) {
    const auto& s = segs[i];
    total = space.add(
        total, space.scale(0.5 * (s.hi - s.lo), space.add(s.vlo, s.vhi)));
  }
  return total;
}

}  // namespace riemannlab

#endif  // RIEMANNLAB_TENT_PATH_HPP_
