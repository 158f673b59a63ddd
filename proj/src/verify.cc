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

#include "riemannlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "riemannlab/completion.hpp"
#include "riemannlab/numfmt.hpp"
#include "riemannlab/riemann.hpp"
#include "riemannlab/space.hpp"
#include "riemannlab/tent_path.hpp"

namespace riemannlab {
namespace {

void run_check(std::vector<VerifyCheck>& out, const char* name,
               const std::function<std::pair<bool, std::string>()>& body) {
  VerifyCheck check;
  check.name = name;
  try {
    auto [pass, detail] = body();
    check.pass = pass;
    check.detail = std::move(detail);
  } catch (const std::exception& e) {
    check.pass = false;
    check.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(check));
}

std::string axiom_detail(const AxiomReport& report) {
  if (report.all()) return "all axioms hold";
  std::string out = "failed:";
  if (!report.norm_zero_is_zero) out += " norm-zero";
  if (!report.homogeneity) out += " homogeneity";
  if (!report.triangle) out += " triangle";
  if (!report.commutativity) out += " commutativity";
  if (!report.associativity) out += " associativity";
  return out;
}

std::string num(double v) { return format_double(v); }

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifySubject& subject,
                                          unsigned general_depth) {
  if (general_depth < 1 || general_depth > 64)
    throw std::out_of_range("general depth must be in [1, 64]");
  const PolySupSpace space;
  const auto& path = subject.path;
  std::vector<VerifyCheck> checks;

  run_check(checks, "real-line-axioms", [&] {
    const AxiomReport r = check_space_axioms(
        RealLine{}, {0.0, 1.0, -2.5, 0.125, 3.75}, {0.0, 1.0, -1.0, 0.5, -3.0});
    return std::pair{r.all(), axiom_detail(r)};
  });

  run_check(checks, "poly-sup-axioms", [&] {
    const std::vector<Polynomial> samples = {
        Polynomial{},
        Polynomial({1.0}),
        Polynomial::monomial(1),
        Polynomial::monomial(7),
        Polynomial({0.5, -1.0, 0.25}),
        exp_partial(4)};
    const AxiomReport r = check_space_axioms(
        space, samples, {0.0, 1.0, -1.0, 2.0, -0.5, 3.5});
    return std::pair{r.all(), axiom_detail(r)};
  });

  run_check(checks, "norm-limit-constant", [&] {
    const Polynomial p({-2.0, 1.0});
    const double expected = space.norm(p);
    const double v = norm_limit(constant_point(space, p), 1e-9);
    const double err = std::fabs(v - expected);
    return std::pair{err <= 1e-9, "err " + num(err)};
  });

  run_check(checks, "norm-limit-exp", [&] {
    const double v = norm_limit(exp_series_point(), 1e-6);
    const double err = std::fabs(v - std::exp(1.0));
    return std::pair{err <= 1e-6, "err " + num(err)};
  });

  run_check(checks, "completion-distance-self", [&] {
    const auto p = exp_series_point();
    const double d = completion_distance(p, p, 1e-9);
    return std::pair{d <= 1e-9, "d " + num(d)};
  });

  run_check(checks, "completion-distance-shift", [&] {
    const auto p = exp_series_point();
    const auto q = constant_point(space, exp_partial(5));
    const double d = completion_distance(p, q, 1e-9);
    const double err = std::fabs(d - exp_remainder_sup(5));
    return std::pair{err <= 1e-8, "err " + num(err)};
  });

  run_check(checks, "fast-cauchy-indices", [&] {
    const auto w = extract_fast_cauchy(exp_series_point(), 10);
    bool ok = w.depth() == 10 && w.indices.size() == 10;
    for (size_t k = 1; ok && k < w.indices.size(); ++k)
      ok = w.indices[k] > w.indices[k - 1];
    return std::pair{ok, "10 strictly increasing indices"};
  });

  run_check(checks, "fast-cauchy-gaps", [&] {
    const auto w = extract_fast_cauchy(exp_series_point(), 10);
    bool ok = true;
    double worst = 0.0;
    for (unsigned k = 2; k <= w.depth(); ++k) {
      const double gap = space_distance(space, w.elements[k - 1],
                                        w.elements[k - 2]);
      const double bound = std::ldexp(1.0, -2 * static_cast<int>(k));
      worst = std::max(worst, gap / bound);
      ok = ok && gap <= bound;
    }
    return std::pair{ok, "max gap/bound " + num(worst)};
  });

  run_check(checks, "horner-vs-powers", [&] {
    const std::vector<Polynomial> ps = {exp_partial(6),
                                        Polynomial({1.0, -3.0, 2.0, 0.5})};
    double worst = 0.0;
    for (const Polynomial& p : ps) {
      for (double t : {0.0, 0.25, 1.0 / 3.0, 0.7, 1.0}) {
        double by_powers = 0.0;
        for (size_t k = 0; k < p.coefficients().size(); ++k)
          by_powers += p.coefficient(k) * std::pow(t, static_cast<double>(k));
        const double err =
            std::fabs(p.eval(t) - by_powers) / (1.0 + std::fabs(by_powers));
        worst = std::max(worst, err);
      }
    }
    return std::pair{worst <= 1e-14, "max rel err " + num(worst)};
  });

  run_check(checks, "monomial-sup-one", [&] {
    bool ok = true;
    for (unsigned k : {0u, 1u, 2u, 5u, 9u}) {
      const SupNormBound b = sup_norm(Polynomial::monomial(k));
      ok = ok && b.value == 1.0 && b.radius <= 1e-12;
    }
    return std::pair{ok, "norm exactly 1, certified"};
  });

  run_check(checks, "sup-norm-homogeneity", [&] {
    const Polynomial p({0.3, -1.2, 0.8, -0.1});
    const double base = space.norm(p);
    double worst = 0.0;
    for (double c : {-3.0, 0.5, 2.0}) {
      const double err =
          std::fabs(space.norm(scale(c, p)) - std::fabs(c) * base);
      worst = std::max(worst, err);
    }
    return std::pair{worst <= 1e-9, "max err " + num(worst)};
  });

  run_check(checks, "sup-norm-triangle", [&] {
    const std::vector<std::pair<Polynomial, Polynomial>> pairs = {
        {exp_partial(4), Polynomial({-1.0, 2.0, -3.0})},
        {Polynomial::monomial(3), Polynomial({0.5, 0.5})}};
    bool ok = true;
    for (const auto& [p, q] : pairs) {
      ok = ok &&
           space.norm(add(p, q)) <= space.norm(p) + space.norm(q) + 1e-9;
    }
    return std::pair{ok, "subadditive on samples"};
  });

  run_check(checks, "nonneg-sup-at-one", [&] {
    bool ok = true;
    for (const Polynomial& p :
         {exp_partial(8), Polynomial({0.1, 0.0, 2.0, 3.0})})
      ok = ok && sup_norm(p).value == p.eval(1.0);
    return std::pair{ok, "sup attained at t = 1 exactly"};
  });

  run_check(checks, "remainder-decreasing", [&] {
    const auto& invf = inverse_factorials();
    bool ok = true;
    for (unsigned n = 0; n <= 40; ++n) {
      const double r = exp_remainder_sup(n);
      ok = ok && exp_remainder_sup(n + 1) < r && r >= invf[n + 1] &&
           r <= 2.0 * invf[n + 1];
    }
    return std::pair{ok, "monotone, within [1, 2] x first omitted term"};
  });

  run_check(checks, "tent-norm-vs-coefficient", [&] {
    bool ok = true;
    for (double x : {0.3, 0.6, 0.09, 0.8125}) {
      const unsigned n = block_index(x);
      ok = ok && sup_norm(tent_map(x)).value == tent_coefficient(n, x);
    }
    return std::pair{ok, "norm equals tent height bitwise"};
  });

  run_check(checks, "peak-decay", [&] {
    bool ok = tent_peak_value(60) < 1e-60;
    for (unsigned n = 2; n < 60; ++n)
      ok = ok && tent_peak_value(n + 1) < tent_peak_value(n);
    return std::pair{ok, "strictly decreasing from n = 2"};
  });

  run_check(checks, "oddness-exact", [&] {
    bool ok = tent_map(0.0).is_zero();
    for (double x : {1.0, 0.75, 0.3, 0.11, 1.0 / 3.0, 0.0078})
      ok = ok && tent_map(-x) == negate(tent_map(x));
    return std::pair{ok, "mirror values are exact negations"};
  });

  run_check(checks, "dyadic-boundary-zero", [&] {
    bool ok = true;
    for (int m = 0; m <= 20; ++m) {
      const double x = std::ldexp(1.0, -m);
      ok = ok && tent_map(x).is_zero() && tent_map(-x).is_zero();
    }
    return std::pair{ok, "zero at every block boundary"};
  });

  run_check(checks, "block-integral-numeric", [&] {
    double worst = 0.0;
    for (unsigned n : {1u, 2u, 3u}) {
      const DyadicBlock b{n};
      const Polynomial sum = riemann_sum(
          space, path,
          regular_partition(b.lo(), b.hi(), 4096, TagRule::Midpoint));
      worst = std::max(worst, space_distance(space, sum, block_integral(n)));
    }
    return std::pair{worst <= 1e-6, "max distance " + num(worst)};
  });

  run_check(checks, "partial-integral-degree", [&] {
    bool ok = true;
    for (double a : {0.7, 0.3, 0.09, 0.02})
      ok = ok &&
           integral_from(a).degree() == static_cast<int>(block_index(a));
    return std::pair{ok, "degree equals block index"};
  });

  run_check(checks, "bitwise-exp-match", [&] {
    bool ok = true;
    for (unsigned n = 0; n <= 25; ++n)
      ok = ok && integral_from(std::ldexp(1.0, -static_cast<int>(n) - 1)) ==
                     exp_partial(n);
    return std::pair{ok, "closed form reproduces partial sums bitwise"};
  });

  run_check(checks, "interval-additivity", [&] {
    double worst = 0.0;
    const double triples[][3] = {
        {0.1, 0.35, 0.9}, {0.03, 0.0625, 0.5}, {0.26, 0.5, 0.77}};
    for (const auto& t : triples) {
      const Polynomial joined =
          add(integral_on(t[0], t[1]), integral_on(t[1], t[2]));
      worst = std::max(worst,
                       space_distance(space, joined, integral_on(t[0], t[2])));
    }
    for (double a : {0.3, 0.01})
      worst = std::max(
          worst, space_distance(space, integral_on(a, 1.0), integral_from(a)));
    return std::pair{worst <= 1e-12, "max distance " + num(worst)};
  });

  run_check(checks, "general-telescoping", [&] {
    const auto witness =
        extract_fast_cauchy(exp_series_point(), general_depth);
    const auto tent_path_obj = build_tent_path(space, witness, general_depth);
    double worst = 0.0;
    for (unsigned n :
         {1u, std::max(1u, general_depth / 2), general_depth}) {
      const Polynomial got = path_integral_from_dyadic(tent_path_obj, n);
      const Polynomial& want = witness.elements[n - 1];
      worst = std::max(worst, space_distance(space, got, want) /
                                  (1.0 + space.norm(want)));
    }
    return std::pair{worst <= 1e-9, "max rel distance " + num(worst)};
  });

  run_check(checks, "general-peak-bound", [&] {
    const auto witness =
        extract_fast_cauchy(exp_series_point(), general_depth);
    bool ok = true;
    double worst = 0.0;
    for (unsigned n = 2; n <= general_depth; ++n) {
      const double peak_norm = space.norm(space.scale(
          std::ldexp(1.0, static_cast<int>(n) + 1),
          space_sub(space, witness.elements[n - 1], witness.elements[n - 2])));
      const double bound = std::ldexp(1.0, -static_cast<int>(n) + 1);
      worst = std::max(worst, peak_norm / bound);
      ok = ok && peak_norm <= bound * (1.0 + 1e-9);
    }
    return std::pair{ok, "max peak/bound " + num(worst)};
  });

  run_check(checks, "lemma-affine", [&] {
    bool ok = true;
    for (size_t n : {size_t{4}, size_t{8}, size_t{64}, size_t{1024}}) {
      const auto affine = [](double x) { return Polynomial({x}); };
      const Polynomial right = riemann_sum(
          space, affine, regular_partition(0.0, 1.0, n, TagRule::Right));
      const Polynomial mid = riemann_sum(
          space, affine, regular_partition(0.0, 1.0, n, TagRule::Midpoint));
      const double dn = static_cast<double>(n);
      ok = ok && right == Polynomial({(dn + 1.0) / (2.0 * dn)}) &&
           mid == Polynomial({0.5});
    }
    return std::pair{ok, "right and midpoint sums exact for dyadic n"};
  });

  run_check(checks, "odd-cancellation", [&] {
    bool ok = true;
    for (size_t n : {size_t{2}, size_t{6}, size_t{10}, size_t{64}}) {
      const Polynomial sum = riemann_sum(
          space, path, regular_partition(-1.0, 1.0, n, TagRule::Midpoint));
      ok = ok && sum.is_zero();
    }
    return std::pair{ok, "even mirrored sums are exactly zero"};
  });

  run_check(checks, "aligned-midpoint-exact", [&] {
    double worst = 0.0;
    const std::pair<int, size_t> cases[] = {{2, 6}, {3, 14}};
    for (const auto& [m, n] : cases) {
      const double a = std::ldexp(1.0, -m);
      const Polynomial sum = riemann_sum(
          space, [](double x) { return tent_map(x); },
          regular_partition(a, 1.0, n, TagRule::Midpoint));
      worst = std::max(worst,
                       space_distance(space, sum, integral_on(a, 1.0)));
    }
    return std::pair{worst <= 1e-13, "max distance " + num(worst)};
  });

  run_check(checks, "tag-sandwich", [&] {
    const DyadicBlock b{2};
    const auto coeff_sum = [&](TagRule rule) {
      return riemann_sum(
                 space, [](double x) { return tent_map(x); },
                 regular_partition(b.lo(), b.peak(), 64, rule))
          .coefficient(2);
    };
    const double lo = coeff_sum(TagRule::Left);
    const double mi = coeff_sum(TagRule::Midpoint);
    const double hi = coeff_sum(TagRule::Right);
    const bool ok = lo <= mi && mi <= hi && lo < hi;
    return std::pair{ok, "left <= midpoint <= right on a rising flank"};
  });

  run_check(checks, "determinism-bitwise", [&] {
    const auto part1 = regular_partition(-1.0, 1.0, 257, TagRule::Random, 42);
    const auto part2 = regular_partition(-1.0, 1.0, 257, TagRule::Random, 42);
    const Polynomial s1 = riemann_sum(space, path, part1);
    const Polynomial s2 = riemann_sum(space, path, part2);
    const bool ok = part1.tags() == part2.tags() && s1 == s2;
    return std::pair{ok, "seeded reruns are bitwise identical"};
  });

  run_check(checks, "scaling-equivariance", [&] {
    const auto part = regular_partition(-1.0, 1.0, 37, TagRule::Random, 7);
    const Polynomial doubled = riemann_sum(
        space, [&](double x) { return scale(2.0, path(x)); }, part);
    const Polynomial after = space.scale(2.0, riemann_sum(space, path, part));
    return std::pair{doubled == after,
                     "power-of-two scaling commutes with summation"};
  });

  return checks;
}

}  // namespace riemannlab
