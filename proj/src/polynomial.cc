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

#include "riemannlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>

#include "riemannlab/numfmt.hpp"

namespace riemannlab {

Polynomial::Polynomial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(unsigned degree) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

double Polynomial::eval(double t) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<double> c(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    c[i] = x + y;
  }
  return Polynomial(std::move(c));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<double> c(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    c[i] = x - y;
  }
  return Polynomial(std::move(c));
}

Polynomial scale(double s, const Polynomial& p) {
  std::vector<double> c(p.coefficients());
  for (double& x : c) x = s * x;
  return Polynomial(std::move(c));
}

Polynomial negate(const Polynomial& p) {
  std::vector<double> c(p.coefficients());
  for (double& x : c) x = -x;
  return Polynomial(std::move(c));
}

namespace {

struct Bracket {
  double ub;  // certified upper bound for |p| on [lo, hi]
  double lo, hi;
  double flo, fhi;  // |p| at the endpoints
  bool operator<(const Bracket& o) const { return ub < o.ub; }
};

}  // namespace

SupNormBound sup_norm(const Polynomial& p, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("sup_norm: tolerance must be > 0");
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {c.empty() ? 0.0 : std::fabs(c[0]), 0.0};

  // |p'| <= slope on [0, 1], so |p| varies by at most slope*width on any
  // subinterval; that turns sampled values into certified upper bounds.
  double slope = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k)
    slope += static_cast<double>(k) * std::fabs(c[k]);

  // Chebyshev-extrema seed grid (129 points, endpoints pinned exactly).
  constexpr int kCells = 128;
  constexpr double kPi = 3.14159265358979323846;
  std::array<double, kCells + 1> t;
  t[0] = 0.0;
  t[kCells] = 1.0;
  for (int j = 1; j < kCells; ++j) t[j] = 0.5 * (1.0 - std::cos(kPi * j / kCells));

  std::array<double, kCells + 1> f;
  double best = 0.0;
  for (int j = 0; j <= kCells; ++j) {
    f[j] = std::fabs(p.eval(t[j]));
    best = std::max(best, f[j]);
  }

  std::priority_queue<Bracket> open;
  for (int j = 0; j < kCells; ++j) {
    const double ub = std::max(f[j], f[j + 1]) + 0.5 * slope * (t[j + 1] - t[j]);
    open.push({ub, t[j], t[j + 1], f[j], f[j + 1]});
  }

  // Subintervals too narrow to split keep their (already tight) bound here.
  double closed_ub = 0.0;
  long guard = 20'000'000;
  while (!open.empty() && open.top().ub > best + tol) {
    if (--guard < 0)
      throw std::runtime_error("sup_norm: refinement failed to converge");
    const Bracket b = open.top();
    open.pop();
    const double m = 0.5 * (b.lo + b.hi);
    if (m <= b.lo || m >= b.hi) {  // width at rounding resolution
      closed_ub = std::max(closed_ub, b.ub);
      continue;
    }
    const double fm = std::fabs(p.eval(m));
    best = std::max(best, fm);
    const double half = 0.5 * slope;
    open.push({std::max(b.flo, fm) + half * (m - b.lo), b.lo, m, b.flo, fm});
    open.push({std::max(fm, b.fhi) + half * (b.hi - m), m, b.hi, fm, b.fhi});
  }

  const double open_ub = open.empty() ? 0.0 : open.top().ub;
  const double radius = std::max(0.0, std::max(open_ub, closed_ub) - best);
  return {best, radius};
}

const std::array<double, 171>& inverse_factorials() {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (int k = 1; k <= 170; ++k) t[k] = t[k - 1] / k;
    return t;
  }();
  return table;
}

Polynomial exp_partial(unsigned n) {
  if (n > 170)
    throw std::out_of_range("exp_partial: order must be <= 170");
  const auto& invf = inverse_factorials();
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = invf[k];
  return Polynomial(std::move(c));
}

double exp_remainder_sup(unsigned n) {
  if (n >= 170) return 0.0;
  const auto& invf = inverse_factorials();
  double acc = 0.0;
  for (unsigned k = 170; k > n; --k) acc += invf[k];
  return acc;
}

std::string to_csv(const Polynomial& p) {
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += format_double(c[i]);
  }
  return out;
}

Polynomial polynomial_from_csv(std::string_view text) {
  if (text.empty()) return {};
  std::vector<double> c;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(
        start, comma == std::string_view::npos ? text.size() - start
                                               : comma - start);
    c.push_back(parse_double(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(c));
}

}  // namespace riemannlab
