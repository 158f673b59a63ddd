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

#ifndef RIEMANNLAB_LAB_HPP_
#define RIEMANNLAB_LAB_HPP_

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <utility>
#include <vector>

#include "riemannlab/riemann.hpp"

namespace riemannlab {

// ---------------------------------------------------------------------------
// Experiment drivers.  Each takes a config, runs the experiment, writes a
// deterministic artifact (CSV or JSON: LF endings, shortest round-trip
// numbers, sorted JSON keys), and returns a summary.  Reruns with equal
// configs produce byte-identical files.
// ---------------------------------------------------------------------------

// Integration interval presets: [-1, 1], [0, 1], [-1, 0].
enum class Interval { Full, Positive, Negative };

const char* interval_name(Interval interval);
Interval parse_interval(std::string_view name);
std::pair<double, double> interval_bounds(Interval interval);
// What the Riemann sums approach on that interval: the zero polynomial on
// [-1, 1] (odd cancellation); +/- the degree-40 exponential partial sum
// on the half intervals, which stands in for the completion limit (its
// tail is ~1e-50, far below every tolerance used here).
Polynomial interval_reference(Interval interval);

// Samples the two-variable surface (x, t) -> tent_map(x)(t) on a regular
// (xres+1) x (tres+1) grid over [-1, 1] x [0, 1] into CSV columns
// "x,t,phi" (x outer, t inner).  Returns the number of data rows.
struct SurfaceConfig {
  unsigned xres = 64;
  unsigned tres = 64;
  std::filesystem::path out;
};
size_t run_surface(const SurfaceConfig& config);

// For each schedule entry n, writes frame_<i>.json describing the Riemann
// sum at resolution n: the weighted terms (tag, coefficients, graph on a
// t-grid with `samples` points) and the accumulated sum.
struct FramesConfig {
  Interval interval = Interval::Full;
  std::vector<size_t> schedule = {4, 8, 16, 32, 64};
  TagRule rule = TagRule::Midpoint;
  uint64_t seed = 0;
  unsigned samples = 65;
  std::filesystem::path outdir;
};
size_t run_frames(const FramesConfig& config);

// Refines Riemann sums of tent_map over the interval until consecutive
// sums are within tol, recording norms, consecutive gaps, and distances
// to the interval reference.  Writes the report CSV to `out` unless the
// path is empty.
struct ConvergeConfig {
  Interval interval = Interval::Positive;
  std::vector<size_t> schedule = {16,   32,   64,   128,  256,  512,
                                  1024, 2048, 4096, 8192, 16384};
  TagRule rule = TagRule::Midpoint;
  uint64_t seed = 0;
  double tol = 1e-9;
  std::filesystem::path out;
};
ConvergenceReport run_converge(const ConvergeConfig& config);

// Probes interval additivity around the split point c at a ladder of
// resolutions (n halved down to 16), comparing the sum over [a, b]
// against the sums over the halves and, where closed forms exist, against
// the exact integrals.  Writes CSV columns
// "N,discrepancy,total_norm,total_degree,left_norm,left_degree,
//  right_norm,right_degree,total_dist,left_dist,right_dist"
// (distance cells stay empty where no closed form exists) to `out` unless
// the path is empty.  Rows are returned coarsest first.
struct ChaslesConfig {
  double a = -1.0;
  double c = 0.0;
  double b = 1.0;
  size_t n = 4096;
  TagRule rule = TagRule::Midpoint;
  uint64_t seed = 0;
  double tol = 1e-3;
  std::filesystem::path out;
};
std::vector<ChaslesReport> run_chasles(const ChaslesConfig& config);

}  // namespace riemannlab

#endif  // RIEMANNLAB_LAB_HPP_
