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

#ifndef RIEMANNLAB_COMPLETION_HPP_
#define RIEMANNLAB_COMPLETION_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "riemannlab/space.hpp"

namespace riemannlab {

// Raised when a supplied modulus/generator breaks its stated contract
// (non-monotone modulus, gap bound violated, inconsistent witness, ...).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// A point of the completion of a normed space, presented constructively as
// a Cauchy sequence with an explicit modulus:
//
//   for every eps > 0 and all i, j >= modulus(eps):
//     norm(generator(i) - generator(j)) <= eps.
//
// The modulus must be monotone (smaller eps never yields a smaller index).
// Nothing about the limit itself is ever materialized — only finite
// evaluations of the generator.
template <NormedSpace S>
struct CompletionPoint {
  S space;
  std::function<typename S::Element(std::uint64_t)> generator;
  std::function<std::uint64_t(double)> modulus;
};

// The point of the completion with constant generator v.
template <NormedSpace S>
CompletionPoint<S> constant_point(S space, typename S::Element v) {
  return {std::move(space),
          [v](std::uint64_t) { return v; },
          [](double) -> std::uint64_t { return 0; }};
}

// Norm of the limit within tol: for N = modulus(tol/2) every later element
// stays within tol/2 of generator(N), hence so does the limit, and the
// norm can move by no more than that.
template <NormedSpace S>
double norm_limit(const CompletionPoint<S>& p, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("norm_limit: tol must be > 0");
  const std::uint64_t n = p.modulus(0.5 * tol);
  return p.space.norm(p.generator(n));
}

// Distance between two limits within tol (tol/2 per point, by the same
// pass-to-the-limit argument as norm_limit).
template <NormedSpace S>
double completion_distance(const CompletionPoint<S>& p,
                           const CompletionPoint<S>& q, double tol) {
  if (!(tol > 0.0))
    throw std::domain_error("completion_distance: tol must be > 0");
  const std::uint64_t n = p.modulus(0.5 * tol);
  const std::uint64_t m = q.modulus(0.5 * tol);
  return p.space.norm(space_sub(p.space, p.generator(n), q.generator(m)));
}

// A finite subsequence extracted from a completion point so that it is
// "fast Cauchy": element k is within 2^-(2k+3) of the limit, and
// consecutive elements are at most 2^-2k apart (k = 2..depth).  Indices
// are 1-based to match the usual telescoping-notation conventions.
template <NormedSpace S>
struct FastCauchyWitness {
  std::vector<std::uint64_t> indices;            // strictly increasing
  std::vector<typename S::Element> elements;     // generator at indices
  unsigned depth() const { return static_cast<unsigned>(indices.size()); }
};

// Extracts the witness by querying the modulus at eps_k = 2^-(2k+3).
// Indices are bumped minimally when the modulus repeats a value (any later
// index inherits the same tail bound, so the bump is sound).  Verifies the
// measured consecutive gaps against 2^-2k; a violation means the supplied
// modulus lied and raises ContractViolation, as does a modulus that
// decreases as eps shrinks.
template <NormedSpace S>
FastCauchyWitness<S> extract_fast_cauchy(const CompletionPoint<S>& p,
                                         unsigned depth) {
  if (depth < 1)
    throw std::domain_error("extract_fast_cauchy: depth must be >= 1");
  FastCauchyWitness<S> w;
  w.indices.reserve(depth);
  w.elements.reserve(depth);
  std::uint64_t prev_raw = 0;
  for (unsigned k = 1; k <= depth; ++k) {
    const double eps = std::ldexp(1.0, -(2 * static_cast<int>(k) + 3));
    const std::uint64_t raw = p.modulus(eps);
    if (k > 1 && raw < prev_raw)
      throw ContractViolation(
          "extract_fast_cauchy: modulus is not monotone");
    prev_raw = raw;
    const std::uint64_t idx =
        w.indices.empty() ? raw : std::max(raw, w.indices.back() + 1);
    w.indices.push_back(idx);
    w.elements.push_back(p.generator(idx));
    if (k >= 2) {
      const double gap = space_distance(p.space, w.elements[k - 1],
                                        w.elements[k - 2]);
      const double bound = std::ldexp(1.0, -2 * static_cast<int>(k));
      if (gap > bound)
        throw ContractViolation(
            "extract_fast_cauchy: sequence gap exceeds the certified bound");
    }
  }
  return w;
}

// The running exponential series as a point of the completion of the
// polynomial space: generator(n) = exp_partial(n), with the exact tail
// bound as modulus.  Beyond order 170 the partial sums are constant at
// double resolution, so the generator clamps there.
inline CompletionPoint<PolySupSpace> exp_series_point(
    PolySupSpace space = {}) {
  return {space,
          [](std::uint64_t n) {
            return exp_partial(n > 170 ? 170u : static_cast<unsigned>(n));
          },
          [](double eps) -> std::uint64_t {
            if (!(eps > 0.0))
              throw std::domain_error("modulus: eps must be > 0");
            for (unsigned k = 0; k <= 170; ++k)
              if (exp_remainder_sup(k) <= eps) return k;
            return 170;  // remainder is exactly 0 here
          }};
}

}  // namespace riemannlab

#endif  // RIEMANNLAB_COMPLETION_HPP_
