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

#ifndef RIEMANNLAB_VERIFY_HPP_
#define RIEMANNLAB_VERIFY_HPP_

#include <functional>
#include <string>
#include <vector>

#include "riemannlab/polynomial.hpp"
#include "riemannlab/tent_map.hpp"

namespace riemannlab {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The map under scrutiny.  Defaults to the built-in cascade; swapping in
// a perturbed map lets tests confirm the suite actually detects faults.
struct VerifySubject {
  std::function<Polynomial(double)> path = [](double x) { return tent_map(x); };
};

// Runs the whole property battery: normed-space axioms, sup-norm
// certificates, completion-point contracts, cascade identities (oddness,
// dyadic zeros, closed-form integrals, exponential partial sums), the
// witness-driven general construction at `general_depth`, and exactness
// properties of the summation engine.  A check that throws is recorded
// as failed with the exception text.
std::vector<VerifyCheck> run_verification(const VerifySubject& subject = {},
                                          unsigned general_depth = 12);

}  // namespace riemannlab

#endif  // RIEMANNLAB_VERIFY_HPP_
