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

#ifndef RIEMANNLAB_ACCUM_HPP_
#define RIEMANNLAB_ACCUM_HPP_

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace riemannlab {

// Error-free accumulation of doubles.
//
// The running sum is represented exactly as a list of nonoverlapping
// partials (Shewchuk-style expansion), so the accumulated value carries no
// rounding error at all until it is read out.  Two consequences matter for
// this library:
//
//   * terms that cancel in exact arithmetic (x and -x) cancel to exactly
//     +0.0 here, regardless of how many other terms are interleaved;
//   * the final value does not depend on the order in which terms arrive,
//     which makes every quadrature result bitwise reproducible.
//
// value() is the faithfully rounded double nearest the exact sum (within
// one ulp; exactly 0.0 whenever the exact sum is zero).
class ExactSum {
 public:
  void add(double x) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < partials_.size(); ++i) {
      double p = partials_[i];
      if (std::fabs(x) < std::fabs(p)) std::swap(x, p);
      const double hi = x + p;
      const double lo = p - (hi - x);
      if (lo != 0.0) partials_[j++] = lo;
      x = hi;
    }
    partials_.resize(j);
    partials_.push_back(x);
  }

  double value() const {
    double s = 0.0;
    for (const double p : partials_) s += p;  // increasing magnitude
    return s;
  }

  void reset() { partials_.clear(); }

 private:
  std::vector<double> partials_;
};

}  // namespace riemannlab

#endif  // RIEMANNLAB_ACCUM_HPP_
