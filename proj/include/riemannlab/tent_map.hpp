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

#ifndef RIEMANNLAB_TENT_MAP_HPP_
#define RIEMANNLAB_TENT_MAP_HPP_

#include <cmath>
#include <optional>

#include "riemannlab/polynomial.hpp"

namespace riemannlab {

// ---------------------------------------------------------------------------
// The tent cascade.
//
// tent_map is an odd, continuous map from [-1, 1] into the space of
// polynomials on [0, 1] (sup norm).  On the dyadic block
// I_n = [2^-(n+1), 2^-n] it is a scalar tent carrying the monomial t^n:
//
//   tent_map(x) = tent_coefficient(n, x) * t^n,     n = block_index(x),
//
// with tent_coefficient rising linearly from 0 at the lower endpoint to
// 2^(n+2)/n! at the midpoint 3*2^-(n+2) and back to 0 at the upper
// endpoint (slope 2^(2n+4)/n!).  Odd reflection covers [-1, 0); the value
// at 0 is the zero polynomial, and peak heights 2^(n+2)/n! -> 0 make the
// map continuous there.
//
// Its integral over [a, 1] (0 < a <= 1) is a polynomial; letting a -> 0
// the integrals converge uniformly to the exponential series, whose degree
// is unbounded — so the limit escapes the polynomial space.  That is the
// engine of every experiment in this library: the map is Riemann
// integrable (with integral 0, by oddness) on [-1, 1], but on [0, 1] its
// Riemann sums form a Cauchy family with no limit in the space.
// ---------------------------------------------------------------------------

// 1/171! is already subnormal, so the shared inverse-factorial table stops
// at n = 170; block-indexed operations are capped there and tent_map is
// flushed to the zero polynomial below 2^-171 (its peaks there are far
// below any tolerance in use).
inline constexpr unsigned kMaxBlock = 170;

// The dyadic block I_n = [2^-(n+1), 2^-n].  Endpoints and midpoint are
// exactly representable for every supported index.
struct DyadicBlock {
  unsigned index;

  double lo() const { return std::ldexp(1.0, -static_cast<int>(index) - 1); }
  double hi() const { return std::ldexp(1.0, -static_cast<int>(index)); }
  double peak() const {
    return std::ldexp(3.0, -static_cast<int>(index) - 2);
  }
  double half_width() const {
    return std::ldexp(1.0, -static_cast<int>(index) - 2);
  }
};

// Index n with 2^-(n+1) <= x <= 2^-n, for x in (0, 1], read off the binary
// exponent.  An exact power of two lies on two adjacent blocks; the lower
// block (larger index) is returned.  Both adjacent tents evaluate to a
// zero coefficient there, so the choice never affects a value.
unsigned block_index(double x);

// Tent slope 2^(2n+4)/n! and peak height 2^(n+2)/n!, both produced from
// the shared inverse-factorial table (exact power-of-two scaling), so
// closed forms built from either agree bitwise.
double tent_scale(unsigned n);
double tent_peak_value(unsigned n);

// The scalar tent on block n; requires x inside the block and n <= 170.
double tent_coefficient(unsigned n, double x);

// The map itself; |x| <= 1.  Values are single-term polynomials
// c * t^block_index(|x|) (or the zero polynomial).
Polynomial tent_map(double x);

// The two-variable surface (x, t) -> tent_map(x)(t) on [-1,1] x [0,1].
double surface_value(double x, double t);

// Closed-form integral of tent_map over the whole block I_n: t^n / n!.
Polynomial block_integral(unsigned n);

// Closed-form integral over [a, 1], 0 < a <= 1: full blocks above a plus
// the quadratic partial piece of a's own block.  At a = 2^-(n+1) this
// reproduces exp_partial(n) coefficient for coefficient (identical
// construction order).  For a below 2^-171 the remaining tail is below
// double resolution and the full 170-term series is returned.
Polynomial integral_from(double a);

// Closed-form integral over [a, b], 0 < a <= b <= 1, assembled directly
// from block pieces (not as a difference of integral_from results, so the
// two routes cross-check each other).
Polynomial integral_on(double a, double b);

// Closed-form integral over any [a, b] in [-1, 1] on which the map is
// Riemann integrable in the polynomial space.  The symmetric core of an
// interval spanning 0 cancels by oddness, so a closed form exists unless
// exactly one endpoint is 0 — the boundary of integrability, where
// std::nullopt is returned.
std::optional<Polynomial> exact_integral(double a, double b);

}  // namespace riemannlab

#endif  // RIEMANNLAB_TENT_MAP_HPP_
