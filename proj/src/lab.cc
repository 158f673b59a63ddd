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

#include "riemannlab/lab.hpp"

#include <algorithm>
#include <fstream>
#include <ios>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "riemannlab/numfmt.hpp"
#include "riemannlab/tent_map.hpp"

namespace riemannlab {
namespace {

constexpr unsigned kMaxResolution = 1024;  // surface grid per axis
constexpr unsigned kMaxSamples = 1025;     // frame t-grid
constexpr size_t kMaxFrameTerms = 4096;    // terms listed per frame

// All artifacts go through here: binary mode keeps LF endings on every
// platform, and parent directories are created on demand.
void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  const std::filesystem::path parent = path.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot open " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
}

std::vector<double> graph_of(const Polynomial& p,
                             const std::vector<double>& grid) {
  std::vector<double> g;
  g.reserve(grid.size());
  for (double t : grid) g.push_back(p.eval(t));
  return g;
}

void require_schedule(const std::vector<size_t>& schedule) {
  if (schedule.empty())
    throw std::domain_error("schedule must be nonempty");
  for (size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::domain_error("schedule must strictly increase");
}

}  // namespace

const char* interval_name(Interval interval) {
  switch (interval) {
    case Interval::Full:
      return "full";
    case Interval::Positive:
      return "positive";
    case Interval::Negative:
      return "negative";
  }
  throw std::domain_error("unknown interval");
}

Interval parse_interval(std::string_view name) {
  if (name == "full") return Interval::Full;
  if (name == "positive") return Interval::Positive;
  if (name == "negative") return Interval::Negative;
  throw std::domain_error("unknown interval name");
}

std::pair<double, double> interval_bounds(Interval interval) {
  switch (interval) {
    case Interval::Full:
      return {-1.0, 1.0};
    case Interval::Positive:
      return {0.0, 1.0};
    case Interval::Negative:
      return {-1.0, 0.0};
  }
  throw std::domain_error("unknown interval");
}

Polynomial interval_reference(Interval interval) {
  switch (interval) {
    case Interval::Full:
      return Polynomial{};
    case Interval::Positive:
      return exp_partial(40);
    case Interval::Negative:
      return negate(exp_partial(40));
  }
  throw std::domain_error("unknown interval");
}

size_t run_surface(const SurfaceConfig& config) {
  if (config.xres < 2 || config.xres > kMaxResolution ||
      config.tres < 2 || config.tres > kMaxResolution)
    throw std::out_of_range("surface resolution out of range");
  if (config.out.empty())
    throw std::domain_error("surface requires an output path");
  const double xr = static_cast<double>(config.xres);
  const double tr = static_cast<double>(config.tres);
  std::string csv = "x,t,phi\n";
  size_t rows = 0;
  for (unsigned i = 0; i <= config.xres; ++i) {
    // (2i - xres)/xres mirrors exactly: x_(xres-i) == -x_i.
    const double x = (2.0 * static_cast<double>(i) - xr) / xr;
    for (unsigned j = 0; j <= config.tres; ++j) {
      const double t = static_cast<double>(j) / tr;
      csv += format_double(x);
      csv += ',';
      csv += format_double(t);
      csv += ',';
      csv += format_double(surface_value(x, t));
      csv += '\n';
      ++rows;
    }
  }
  write_text_file(config.out, csv);
  return rows;
}

size_t run_frames(const FramesConfig& config) {
  require_schedule(config.schedule);
  if (config.schedule.back() > kMaxFrameTerms)
    throw std::out_of_range("frame resolution out of range");
  if (config.samples < 2 || config.samples > kMaxSamples)
    throw std::out_of_range("sample count out of range");
  if (config.outdir.empty())
    throw std::domain_error("frames require an output directory");
  const auto [a, b] = interval_bounds(config.interval);
  const PolySupSpace space;

  std::vector<double> grid(config.samples);
  for (unsigned j = 0; j < config.samples; ++j)
    grid[j] = static_cast<double>(j) / static_cast<double>(config.samples - 1);

  std::filesystem::create_directories(config.outdir);
  for (size_t idx = 0; idx < config.schedule.size(); ++idx) {
    const size_t n = config.schedule[idx];
    const TaggedPartition partition =
        regular_partition(a, b, n, config.rule, config.seed);
    const auto& bp = partition.breakpoints();
    const auto& tags = partition.tags();

    nlohmann::json frame;
    frame["a"] = a;
    frame["b"] = b;
    frame["n"] = n;
    frame["rule"] = tag_rule_name(config.rule);
    frame["seed"] = config.seed;
    frame["samples"] = config.samples;
    frame["t"] = grid;

    auto acc = space.accumulator();
    nlohmann::json terms = nlohmann::json::array();
    for (size_t i = 0; i < n; ++i) {
      const Polynomial term =
          space.scale(bp[i + 1] - bp[i], tent_map(tags[i]));
      acc.add(term);
      nlohmann::json jt;
      jt["x"] = tags[i];
      jt["coeffs"] = term.coefficients();
      jt["graph"] = graph_of(term, grid);
      terms.push_back(std::move(jt));
    }
    frame["terms"] = std::move(terms);

    const Polynomial sum = acc.total();
    frame["sum"] = {{"coeffs", sum.coefficients()},
                    {"graph", graph_of(sum, grid)}};

    write_text_file(config.outdir / ("frame_" + std::to_string(idx) + ".json"),
                    frame.dump() + "\n");
  }
  return config.schedule.size();
}

ConvergenceReport run_converge(const ConvergeConfig& config) {
  const auto [a, b] = interval_bounds(config.interval);
  const PolySupSpace space;
  const ConvergenceReport report = refine_until_cauchy(
      space, [](double x) { return tent_map(x); }, a, b, config.tol,
      std::span<const size_t>(config.schedule), config.rule, config.seed,
      std::optional<Polynomial>(interval_reference(config.interval)));
  if (!config.out.empty()) write_text_file(config.out, to_csv(report));
  return report;
}

std::vector<ChaslesReport> run_chasles(const ChaslesConfig& config) {
  std::vector<size_t> ladder;
  ladder.push_back(config.n);
  for (size_t m = config.n / 2; m >= 16; m /= 2) ladder.push_back(m);
  std::reverse(ladder.begin(), ladder.end());

  std::vector<ChaslesReport> reports;
  reports.reserve(ladder.size());
  for (size_t m : ladder)
    reports.push_back(chasles_check(
        [](double x) { return tent_map(x); },
        [](double lo, double hi) { return exact_integral(lo, hi); },
        config.a, config.c, config.b, m, config.rule, config.seed));

  if (!config.out.empty()) {
    std::string csv =
        "N,discrepancy,total_norm,total_degree,left_norm,left_degree,"
        "right_norm,right_degree,total_dist,left_dist,right_dist\n";
    for (const ChaslesReport& r : reports) {
      csv += format_u64(r.n);
      csv += ',';
      csv += format_double(r.discrepancy);
      csv += ',';
      csv += format_double(r.total.sum_norm);
      csv += ',';
      csv += std::to_string(r.total.degree);
      csv += ',';
      csv += format_double(r.left.sum_norm);
      csv += ',';
      csv += std::to_string(r.left.degree);
      csv += ',';
      csv += format_double(r.right.sum_norm);
      csv += ',';
      csv += std::to_string(r.right.degree);
      csv += ',';
      if (r.total.exact_dist) csv += format_double(*r.total.exact_dist);
      csv += ',';
      if (r.left.exact_dist) csv += format_double(*r.left.exact_dist);
      csv += ',';
      if (r.right.exact_dist) csv += format_double(*r.right.exact_dist);
      csv += '\n';
    }
    write_text_file(config.out, csv);
  }
  return reports;
}

}  // namespace riemannlab
