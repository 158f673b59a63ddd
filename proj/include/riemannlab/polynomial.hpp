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

#ifndef RIEMANNLAB_POLYNOMIAL_HPP_
#define RIEMANNLAB_POLYNOMIAL_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace riemannlab {

// A real polynomial viewed as an element of the normed space of continuous
// functions on [0, 1] under the sup norm.  Coefficients are stored densely
// in ascending degree order; the empty list is the zero polynomial.
//
// Trailing coefficients are trimmed only when they are exactly 0.0: the
// degree of a polynomial is load-bearing data in this library (unbounded
// degree growth is the witness that a limit escapes the subspace), so no
// epsilon threshold is ever applied.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  // t^degree.
  static Polynomial monomial(unsigned degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<double>& coefficients() const { return coeffs_; }
  // Coefficient of t^k; 0.0 beyond the degree.
  double coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
  }

  // Evaluation by Horner's scheme.  Intended domain is t in [0, 1].
  double eval(double t) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial scale(double s, const Polynomial& p);
Polynomial negate(const Polynomial& p);

// Certified enclosure of sup_{t in [0,1]} |p(t)|:
//
//   value <= true sup <= value + radius,   with radius <= tol.
//
// The lower bound comes from sampling (a 129-point Chebyshev-extrema grid
// plus refinement midpoints); the upper bound from branch-and-bound over
// subintervals using the derivative bound sum_k k*|a_k|.
struct SupNormBound {
  double value = 0.0;
  double radius = 0.0;
};
SupNormBound sup_norm(const Polynomial& p, double tol = 1e-12);

// Shared inverse-factorial table; entry k holds 1/k! computed by iterated
// division (t[k] = t[k-1]/k).  Every closed form in the library draws from
// this single construction so that equal quantities agree bitwise.
const std::array<double, 171>& inverse_factorials();

// Truncated exponential series sum_{k=0}^{n} t^k/k!.  Requires n <= 170
// (1/171! underflows the normal double range).
Polynomial exp_partial(unsigned n);

// Sup-norm distance on [0,1] between exp_partial(n) and the full series at
// double resolution: sum_{k=n+1}^{170} 1/k!, summed smallest term first.
// Returns 0 for n >= 170.
double exp_remainder_sup(unsigned n);

// Textual serialization: comma-separated ascending coefficients in
// shortest round-trip decimal form.  The empty string is the zero
// polynomial.  Parsing rejects anything else.
std::string to_csv(const Polynomial& p);
Polynomial polynomial_from_csv(std::string_view text);

}  // namespace riemannlab

#endif  // RIEMANNLAB_POLYNOMIAL_HPP_
