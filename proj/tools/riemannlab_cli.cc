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

// Command-line front end.  Talks to the core exclusively through the C
// API in riemannlab/riemannlab.h; CLI11 and JSON are used only for
// argument and config-file plumbing.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riemannlab/riemannlab.h"

namespace {

int fail_rml(const char* what) {
  std::cerr << "error: " << what << ": " << rml_last_error() << "\n";
  return 2;
}

rml_tag_rule tag_rule_from(const std::string& name) {
  if (name == "left") return RML_TAG_LEFT;
  if (name == "right") return RML_TAG_RIGHT;
  if (name == "midpoint") return RML_TAG_MIDPOINT;
  if (name == "random") return RML_TAG_RANDOM;
  throw std::runtime_error("unknown tag rule: " + name);
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return nlohmann::json::parse(in);
}

// Config-file values fill in only where the flag was not given.
template <typename T>
void merge(const nlohmann::json& cfg, const char* key, const CLI::Option* opt,
           T& value) {
  if (opt->count() == 0 && cfg.contains(key)) value = cfg.at(key).get<T>();
}

struct VerifyTally {
  size_t total = 0;
  size_t failed = 0;
};

void print_check(const char* name, int pass, const char* detail, void* user) {
  auto* tally = static_cast<VerifyTally*>(user);
  ++tally->total;
  if (pass == 0) ++tally->failed;
  std::cout << (pass != 0 ? "[PASS] " : "[FAIL] ") << name;
  if (detail != nullptr && detail[0] != '\0') std::cout << " - " << detail;
  std::cout << "\n";
}

int cmd_surface(unsigned xres, unsigned tres, const std::string& out) {
  size_t rows = 0;
  if (rml_emit_surface(xres, tres, out.c_str(), &rows) != RML_OK)
    return fail_rml("surface");
  std::cout << "wrote " << out << " (" << rows << " data rows)\n";
  return 0;
}

int cmd_frames(const std::string& interval, const std::vector<size_t>& sched,
               const std::string& tags, uint64_t seed, unsigned samples,
               const std::string& outdir) {
  size_t frames = 0;
  if (rml_emit_frames(interval.c_str(), sched.data(), sched.size(),
                      tag_rule_from(tags), seed, samples, outdir.c_str(),
                      &frames) != RML_OK)
    return fail_rml("frames");
  std::cout << "wrote " << frames << " frames to " << outdir << "\n";
  return 0;
}

int cmd_converge(const std::string& interval, const std::vector<size_t>& sched,
                 const std::string& tags, uint64_t seed, double tol,
                 const std::string& out) {
  rml_report* report = nullptr;
  if (rml_emit_converge(interval.c_str(), sched.data(), sched.size(),
                        tag_rule_from(tags), seed, tol, out.c_str(),
                        &report) != RML_OK)
    return fail_rml("converge");
  size_t rows = 0;
  rml_verdict verdict = RML_VERDICT_EXHAUSTED;
  rml_converge_row last{};
  if (rml_report_rows(report, &rows) != RML_OK ||
      rml_report_verdict(report, &verdict) != RML_OK ||
      rml_report_row(report, rows - 1, &last) != RML_OK) {
    rml_report_free(report);
    return fail_rml("converge report");
  }
  rml_report_free(report);
  std::cout << "wrote " << out << " (" << rows << " rows)\n";
  std::cout << "final N=" << last.n << " sum_norm=" << last.sum_norm;
  if (last.has_gap != 0) std::cout << " gap=" << last.gap_prev;
  if (last.has_dist != 0) std::cout << " dist_ref=" << last.dist_ref;
  std::cout << "\n";
  std::cout << (verdict == RML_VERDICT_CAUCHY
                    ? "verdict: consecutive sums within tolerance\n"
                    : "verdict: schedule exhausted before tolerance\n");
  return 0;
}

int cmd_chasles(double a, double c, double b, size_t n,
                const std::string& tags, uint64_t seed, double tol,
                const std::string& out) {
  rml_chasles_summary last{};
  if (rml_emit_chasles(a, c, b, n, tag_rule_from(tags), seed, out.c_str(),
                       &last) != RML_OK)
    return fail_rml("chasles");
  std::cout << "wrote " << out << "\n";
  std::cout << "final N=" << last.n << " discrepancy=" << last.discrepancy
            << (last.discrepancy <= tol ? " (within tol)" : " (above tol)")
            << "\n";
  std::cout << "total: norm=" << last.total_norm
            << " degree=" << last.total_degree;
  if (last.has_total_dist != 0)
    std::cout << " dist_exact=" << last.total_dist;
  std::cout << "\n";
  std::cout << "left:  norm=" << last.left_norm
            << " degree=" << last.left_degree;
  if (last.has_left_dist != 0)
    std::cout << " dist_exact=" << last.left_dist;
  else
    std::cout << " (no closed-form integral)";
  std::cout << "\n";
  std::cout << "right: norm=" << last.right_norm
            << " degree=" << last.right_degree;
  if (last.has_right_dist != 0)
    std::cout << " dist_exact=" << last.right_dist;
  else
    std::cout << " (no closed-form integral)";
  std::cout << "\n";
  return 0;
}

int cmd_verify(unsigned depth) {
  VerifyTally tally;
  size_t failures = 0;
  if (rml_verify_run(print_check, &tally, depth, &failures) != RML_OK)
    return fail_rml("verify");
  std::cout << tally.total << " checks, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Riemann sums valued in the polynomials on [0,1]: sample the map, "
      "watch its sums refine, and probe where interval additivity breaks."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rml_version()));

  const std::vector<std::string> kRules = {"left", "right", "midpoint",
                                           "random"};
  const std::vector<std::string> kIntervals = {"full", "positive",
                                               "negative"};

  // surface
  auto* surface = app.add_subcommand(
      "surface", "Sample the two-variable surface under the map to CSV");
  unsigned s_xres = 64, s_tres = 64;
  std::string s_out = "surface.csv", s_config;
  auto* s_xres_opt = surface->add_option("--xres", s_xres, "x grid cells");
  auto* s_tres_opt = surface->add_option("--tres", s_tres, "t grid cells");
  auto* s_out_opt = surface->add_option("--out", s_out, "output CSV path");
  surface->add_option("--config", s_config, "JSON config file");

  // frames
  auto* frames = app.add_subcommand(
      "frames", "Emit per-resolution Riemann-sum anatomy as JSON frames");
  std::string f_interval = "full", f_tags = "midpoint", f_outdir = "frames",
              f_config;
  std::vector<size_t> f_sched = {4, 8, 16, 32, 64};
  uint64_t f_seed = 0;
  unsigned f_samples = 65;
  auto* f_interval_opt =
      frames->add_option("--interval", f_interval, "integration interval")
          ->check(CLI::IsMember(kIntervals));
  auto* f_sched_opt =
      frames->add_option("--schedule", f_sched, "subinterval counts")
          ->delimiter(',');
  auto* f_tags_opt = frames->add_option("--tags", f_tags, "tag rule")
                         ->check(CLI::IsMember(kRules));
  auto* f_seed_opt =
      frames->add_option("--seed", f_seed, "seed for random tags");
  auto* f_samples_opt =
      frames->add_option("--samples", f_samples, "t samples per graph");
  auto* f_outdir_opt =
      frames->add_option("--outdir", f_outdir, "output directory");
  frames->add_option("--config", f_config, "JSON config file");

  // converge
  auto* converge = app.add_subcommand(
      "converge", "Refine Riemann sums on an interval preset");
  std::string c_interval = "positive", c_tags = "midpoint",
              c_out = "converge.csv", c_config;
  std::vector<size_t> c_sched = {16,  32,  64,   128,  256, 512,
                                 1024, 2048, 4096, 8192, 16384};
  uint64_t c_seed = 0;
  double c_tol = 1e-9;
  auto* c_interval_opt =
      converge->add_option("--interval", c_interval, "integration interval")
          ->check(CLI::IsMember(kIntervals));
  auto* c_sched_opt =
      converge->add_option("--schedule", c_sched, "subinterval counts")
          ->delimiter(',');
  auto* c_tags_opt = converge->add_option("--tags", c_tags, "tag rule")
                         ->check(CLI::IsMember(kRules));
  auto* c_seed_opt =
      converge->add_option("--seed", c_seed, "seed for random tags");
  auto* c_tol_opt =
      converge->add_option("--tol", c_tol, "consecutive-sum tolerance");
  auto* c_out_opt = converge->add_option("--out", c_out, "output CSV path");
  converge->add_option("--config", c_config, "JSON config file");

  // chasles
  auto* chasles = app.add_subcommand(
      "chasles", "Probe interval additivity around a split point");
  double h_a = -1.0, h_c = 0.0, h_b = 1.0, h_tol = 1e-3;
  size_t h_n = 4096;
  std::string h_tags = "midpoint", h_out = "chasles.csv", h_config;
  uint64_t h_seed = 0;
  auto* h_a_opt = chasles->add_option("--a", h_a, "left endpoint");
  auto* h_c_opt = chasles->add_option("--c", h_c, "split point");
  auto* h_b_opt = chasles->add_option("--b", h_b, "right endpoint");
  auto* h_n_opt =
      chasles->add_option("--n", h_n, "subintervals per half at the top");
  auto* h_tags_opt = chasles->add_option("--tags", h_tags, "tag rule")
                         ->check(CLI::IsMember(kRules));
  auto* h_seed_opt =
      chasles->add_option("--seed", h_seed, "seed for random tags");
  auto* h_tol_opt =
      chasles->add_option("--tol", h_tol, "discrepancy tolerance to report");
  auto* h_out_opt = chasles->add_option("--out", h_out, "output CSV path");
  chasles->add_option("--config", h_config, "JSON config file");

  // verify
  auto* verify =
      app.add_subcommand("verify", "Run the self-check property battery");
  unsigned v_depth = 12;
  verify->add_option("--depth", v_depth,
                     "depth of the witness-driven construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*surface) {
      if (!s_config.empty()) {
        const nlohmann::json cfg = load_config(s_config);
        merge(cfg, "xres", s_xres_opt, s_xres);
        merge(cfg, "tres", s_tres_opt, s_tres);
        merge(cfg, "out", s_out_opt, s_out);
      }
      return cmd_surface(s_xres, s_tres, s_out);
    }
    if (*frames) {
      if (!f_config.empty()) {
        const nlohmann::json cfg = load_config(f_config);
        merge(cfg, "interval", f_interval_opt, f_interval);
        merge(cfg, "schedule", f_sched_opt, f_sched);
        merge(cfg, "tags", f_tags_opt, f_tags);
        merge(cfg, "seed", f_seed_opt, f_seed);
        merge(cfg, "samples", f_samples_opt, f_samples);
        merge(cfg, "outdir", f_outdir_opt, f_outdir);
      }
      return cmd_frames(f_interval, f_sched, f_tags, f_seed, f_samples,
                        f_outdir);
    }
    if (*converge) {
      if (!c_config.empty()) {
        const nlohmann::json cfg = load_config(c_config);
        merge(cfg, "interval", c_interval_opt, c_interval);
        merge(cfg, "schedule", c_sched_opt, c_sched);
        merge(cfg, "tags", c_tags_opt, c_tags);
        merge(cfg, "seed", c_seed_opt, c_seed);
        merge(cfg, "tol", c_tol_opt, c_tol);
        merge(cfg, "out", c_out_opt, c_out);
      }
      return cmd_converge(c_interval, c_sched, c_tags, c_seed, c_tol, c_out);
    }
    if (*chasles) {
      if (!h_config.empty()) {
        const nlohmann::json cfg = load_config(h_config);
        merge(cfg, "a", h_a_opt, h_a);
        merge(cfg, "c", h_c_opt, h_c);
        merge(cfg, "b", h_b_opt, h_b);
        merge(cfg, "n", h_n_opt, h_n);
        merge(cfg, "tags", h_tags_opt, h_tags);
        merge(cfg, "seed", h_seed_opt, h_seed);
        merge(cfg, "tol", h_tol_opt, h_tol);
        merge(cfg, "out", h_out_opt, h_out);
      }
      return cmd_chasles(h_a, h_c, h_b, h_n, h_tags, h_seed, h_tol, h_out);
    }
    if (*verify) return cmd_verify(v_depth);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
