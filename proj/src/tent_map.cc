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

#include "riemannlab/tent_map.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace riemannlab {
namespace {

// Smallest x still inside a supported block: the lower endpoint of I_170.
const double kMinSupported = std::ldexp(1.0, -171);

void require_block(unsigned n) {
  if (n > kMaxBlock) throw std::out_of_range("block index exceeds 170");
}

// Integral of the block-n tent over [u, v], for lo <= u <= v <= hi.
// Both endpoint offsets are Sterbenz-exact, so when [u, v] is the whole
// block this evaluates bitwise to 1/n!.
double segment_area(unsigned n, double u, double v) {
  const DyadicBlock b{n};
  const double s = tent_scale(n);
  const double h = b.half_width();
  if (v <= b.peak()) {
    const double du = u - b.lo();
    const double dv = v - b.lo();
    return 0.5 * s * (dv * dv - du * du);
  }
  if (u >= b.peak()) {
    const double du = b.hi() - u;
    const double dv = b.hi() - v;
    return 0.5 * s * (du * du - dv * dv);
  }
  const double du = u - b.lo();
  const double dv = b.hi() - v;
  return 0.5 * s * (2.0 * h * h - du * du - dv * dv);
}

// Integral of the block-n tent over [a, hi]; the closed form used by
// integral_from.  Kept distinct from segment_area so the [a, 1] and
// [a, b] routes cross-check each other.
double tail_area(unsigned n, double a) {
  const DyadicBlock b{n};
  const double s = tent_scale(n);
  if (a >= b.peak()) {
    const double d = b.hi() - a;
    return 0.5 * s * d * d;
  }
  const double h = b.half_width();
  const double d = a - b.lo();
  return 0.5 * s * (2.0 * h * h - d * d);
}

}  // namespace

unsigned block_index(double x) {
  if (!(x > 0.0) || x > 1.0)
    throw std::domain_error("block_index requires x in (0, 1]");
  int e = 0;
  const double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
  // m == 0.5 means x = 2^(e-1), shared by two blocks; pick the lower one,
  // where x is the upper endpoint.
  return m == 0.5 ? static_cast<unsigned>(1 - e) : static_cast<unsigned>(-e);
}

double tent_scale(unsigned n) {
  require_block(n);
  return std::ldexp(inverse_factorials()[n], 2 * static_cast<int>(n) + 4);
}

double tent_peak_value(unsigned n) {
  require_block(n);
  return std::ldexp(inverse_factorials()[n], static_cast<int>(n) + 2);
}

double tent_coefficient(unsigned n, double x) {
  require_block(n);
  const DyadicBlock b{n};
  if (!(x >= b.lo()) || x > b.hi())
    throw std::domain_error("tent_coefficient requires x in the block");
  const double s = tent_scale(n);
  // Both differences are exact: the endpoints lie within a factor of two
  // of x, so Sterbenz's lemma applies.
  return x <= b.peak() ? s * (x - b.lo()) : s * (b.hi() - x);
}

Polynomial tent_map(double x) {
  if (!(std::fabs(x) <= 1.0))
    throw std::domain_error("tent_map requires x in [-1, 1]");
  const double ax = std::fabs(x);
  // At exactly 2^-171 the tent value is zero anyway (block boundary).
  if (ax <= kMinSupported) return Polynomial{};
  const unsigned n = block_index(ax);
  double c = tent_coefficient(n, ax);
  if (x < 0.0) c = -c;
  if (c == 0.0) return Polynomial{};
  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[n] = c;
  return Polynomial(std::move(coeffs));
}

double surface_value(double x, double t) {
  if (!(t >= 0.0) || t > 1.0)
    throw std::domain_error("surface_value requires t in [0, 1]");
  return tent_map(x).eval(t);
}

Polynomial block_integral(unsigned n) {
  require_block(n);
  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[n] = inverse_factorials()[n];
  return Polynomial(std::move(coeffs));
}

Polynomial integral_from(double a) {
  if (!(a > 0.0) || a > 1.0)
    throw std::domain_error("integral_from requires a in (0, 1]");
  const auto& invf = inverse_factorials();
  if (a <= kMinSupported) {
    // Everything below 2^-171 integrates to zero; the rest is the full
    // supported cascade.
    return exp_partial(kMaxBlock);
  }
  const unsigned n = block_index(a);
  std::vector<double> coeffs(n + 1, 0.0);
  for (unsigned k = 0; k < n; ++k) coeffs[k] = invf[k];
  coeffs[n] = tail_area(n, a);
  return Polynomial(std::move(coeffs));
}

Polynomial integral_on(double a, double b) {
  if (!(a > 0.0) || !(b >= a) || b > 1.0)
    throw std::domain_error("integral_on requires 0 < a <= b <= 1");
  if (b <= kMinSupported) return Polynomial{};
  if (a < kMinSupported) a = kMinSupported;
  // 2^-171 is the lower edge of the last supported block, not block 171.
  const unsigned na = a == kMinSupported ? kMaxBlock : block_index(a);
  const unsigned nb = block_index(b);
  const auto& invf = inverse_factorials();
  std::vector<double> coeffs(na + 1, 0.0);
  if (na == nb) {
    coeffs[na] = segment_area(na, a, b);
  } else {
    coeffs[na] = segment_area(na, a, DyadicBlock{na}.hi());
    for (unsigned k = nb + 1; k < na; ++k) coeffs[k] = invf[k];
    coeffs[nb] = segment_area(nb, DyadicBlock{nb}.lo(), b);
  }
  return Polynomial(std::move(coeffs));
}

std::optional<Polynomial> exact_integral(double a, double b) {
  if (!(std::fabs(a) <= 1.0) || !(std::fabs(b) <= 1.0) || !(a <= b))
    throw std::domain_error(
        "exact_integral requires -1 <= a <= b <= 1");
  if (a == 0.0 && b == 0.0) return Polynomial{};
  // One endpoint at the origin is exactly the non-integrable case.
  if (a == 0.0 || b == 0.0) return std::nullopt;
  if (a > 0.0) return integral_on(a, b);
  if (b < 0.0) return negate(integral_on(-b, -a));
  // a < 0 < b: the symmetric core cancels by oddness.
  if (b == -a) return Polynomial{};
  if (b > -a) return integral_on(-a, b);
  return negate(integral_on(b, -a));
}

}  // namespace riemannlab
