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

#ifndef RIEMANNLAB_SPACE_HPP_
#define RIEMANNLAB_SPACE_HPP_

#include <cmath>
#include <concepts>
#include <cstddef>
#include <vector>

#include "riemannlab/accum.hpp"
#include "riemannlab/polynomial.hpp"

namespace riemannlab {

// Contract for a normed vector space instance.  Instances are small
// stateless (or configuration-only) values; every operation is pure, so a
// space can be shared freely across threads.
template <class S>
concept NormedSpace = requires(const S& s, const typename S::Element& a,
                               const typename S::Element& b, double c) {
  typename S::Element;
  { s.zero() } -> std::same_as<typename S::Element>;
  { s.add(a, b) } -> std::same_as<typename S::Element>;
  { s.scale(c, a) } -> std::same_as<typename S::Element>;
  { s.norm(a) } -> std::convertible_to<double>;
};

template <NormedSpace S>
typename S::Element space_sub(const S& s, const typename S::Element& a,
                              const typename S::Element& b) {
  return s.add(a, s.scale(-1.0, b));
}

template <NormedSpace S>
double space_distance(const S& s, const typename S::Element& a,
                      const typename S::Element& b) {
  return s.norm(space_sub(s, a, b));
}

// Equality within tolerance; the library-wide default for space-level
// comparisons is 1e-9.
template <NormedSpace S>
bool approx_equal(const S& s, const typename S::Element& a,
                  const typename S::Element& b, double tol = 1e-9) {
  return space_distance(s, a, b) <= tol;
}

// The real line with |.| — the smallest useful instance, handy for tests
// with trivially checkable values.
struct RealLine {
  using Element = double;

  double zero() const { return 0.0; }
  double add(double a, double b) const { return a + b; }
  double scale(double c, double a) const { return c * a; }
  double norm(double a) const { return std::fabs(a); }

  struct Accumulator {
    ExactSum sum;
    void add(double x) { sum.add(x); }
    double total() const { return sum.value(); }
  };
  Accumulator accumulator() const { return {}; }
};

// Polynomials on [0, 1] under the sup norm — the incomplete space at the
// heart of the library.  norm() reports the certified lower bound of the
// sup-norm enclosure (the enclosure radius is at most norm_tolerance).
struct PolySupSpace {
  using Element = Polynomial;

  double norm_tolerance = 1e-12;

  Polynomial zero() const { return {}; }
  Polynomial add(const Polynomial& a, const Polynomial& b) const {
    return riemannlab::add(a, b);
  }
  Polynomial scale(double c, const Polynomial& a) const {
    return riemannlab::scale(c, a);
  }
  double norm(const Polynomial& a) const {
    return sup_norm(a, norm_tolerance).value;
  }

  // Coefficient-wise error-free accumulation.  Skipping coefficients that
  // are exactly zero does not change the exact sum, so the result is
  // identical to accumulating full coefficient rows.
  struct Accumulator {
    std::vector<ExactSum> sums;
    void add(const Polynomial& p) {
      const auto& c = p.coefficients();
      if (c.size() > sums.size()) sums.resize(c.size());
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0.0) sums[k].add(c[k]);
    }
    Polynomial total() const {
      std::vector<double> c(sums.size());
      for (std::size_t k = 0; k < sums.size(); ++k) c[k] = sums[k].value();
      return Polynomial(std::move(c));
    }
  };
  Accumulator accumulator() const { return {}; }
};

// Results of the sampled vector-space axiom checks (see
// check_space_axioms).  Each flag covers the corresponding axiom over all
// supplied samples.
struct AxiomReport {
  bool norm_zero_is_zero = false;
  bool homogeneity = false;
  bool triangle = false;
  bool commutativity = false;
  bool associativity = false;

  bool all() const {
    return norm_zero_is_zero && homogeneity && triangle && commutativity &&
           associativity;
  }
};

// Validates the axioms on sampled elements/scalars.  rel_tol covers
// rounding in the space's arithmetic; abs_slack covers certification
// radii of approximate norms (e.g. sup-norm enclosures).
template <NormedSpace S>
AxiomReport check_space_axioms(const S& s,
                               const std::vector<typename S::Element>& samples,
                               const std::vector<double>& scalars,
                               double rel_tol = 1e-12,
                               double abs_slack = 1e-11) {
  AxiomReport r;
  r.norm_zero_is_zero = s.norm(s.zero()) == 0.0;

  r.homogeneity = true;
  for (const auto& v : samples) {
    const double nv = s.norm(v);
    for (const double c : scalars) {
      const double lhs = s.norm(s.scale(c, v));
      const double rhs = std::fabs(c) * nv;
      if (std::fabs(lhs - rhs) > rel_tol * (1.0 + rhs) + abs_slack) {
        r.homogeneity = false;
      }
    }
  }

  r.triangle = true;
  r.commutativity = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const auto& a = samples[i];
      const auto& b = samples[j];
      const double na = s.norm(a);
      const double nb = s.norm(b);
      if (s.norm(s.add(a, b)) > na + nb + rel_tol * (1.0 + na + nb) + abs_slack)
        r.triangle = false;
      const double comm = space_distance(s, s.add(a, b), s.add(b, a));
      if (comm > rel_tol * (1.0 + na + nb)) r.commutativity = false;
    }
  }

  r.associativity = true;
  for (std::size_t i = 0; i + 2 < samples.size(); ++i) {
    const auto& a = samples[i];
    const auto& b = samples[i + 1];
    const auto& c = samples[i + 2];
    const double scale3 = 1.0 + s.norm(a) + s.norm(b) + s.norm(c);
    const double gap =
        space_distance(s, s.add(s.add(a, b), c), s.add(a, s.add(b, c)));
    if (gap > rel_tol * scale3 + abs_slack) r.associativity = false;
  }
  return r;
}

}  // namespace riemannlab

#endif  // RIEMANNLAB_SPACE_HPP_
