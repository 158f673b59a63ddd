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

#include "riemannlab/riemannlab.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <ios>
#include <new>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "riemannlab/completion.hpp"
#include "riemannlab/lab.hpp"
#include "riemannlab/polynomial.hpp"
#include "riemannlab/riemann.hpp"
#include "riemannlab/tent_map.hpp"
#include "riemannlab/verify.hpp"

struct rml_poly {
  riemannlab::Polynomial value;
};
struct rml_partition {
  riemannlab::TaggedPartition value;
};
struct rml_report {
  riemannlab::ConvergenceReport value;
};

namespace {

thread_local std::string g_last_error;

// Single choke point turning C++ exceptions into status codes.
template <typename F>
rml_status guard(F&& fn) noexcept {
  g_last_error.clear();
  try {
    fn();
    return RML_OK;
  } catch (const riemannlab::ContractViolation& e) {
    g_last_error = e.what();
    return RML_ERR_CONTRACT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return RML_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RML_ERR_DOMAIN;
  } catch (const std::length_error& e) {
    g_last_error = e.what();
    return RML_ERR_NOMEM;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return RML_ERR_RANGE;
  } catch (const std::range_error& e) {
    g_last_error = e.what();
    return RML_ERR_RANGE;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return RML_ERR_IO;
  } catch (const std::filesystem::filesystem_error& e) {
    g_last_error = e.what();
    return RML_ERR_IO;
  } catch (const std::system_error& e) {
    g_last_error = e.what();
    return RML_ERR_IO;
  } catch (const std::bad_alloc& e) {
    g_last_error = e.what();
    return RML_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RML_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RML_ERR_INTERNAL;
  }
}

template <typename T>
const T& deref(const T* ptr, const char* what) {
  if (ptr == nullptr)
    throw std::domain_error(std::string("null ") + what);
  return *ptr;
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr)
    throw std::domain_error(std::string("null ") + what);
}

riemannlab::TagRule to_tag_rule(rml_tag_rule rule) {
  switch (rule) {
    case RML_TAG_LEFT:
      return riemannlab::TagRule::Left;
    case RML_TAG_RIGHT:
      return riemannlab::TagRule::Right;
    case RML_TAG_MIDPOINT:
      return riemannlab::TagRule::Midpoint;
    case RML_TAG_RANDOM:
      return riemannlab::TagRule::Random;
  }
  throw std::domain_error("unknown tag rule value");
}

std::vector<size_t> to_schedule(const size_t* schedule, size_t len) {
  if (len > 0) require(schedule, "schedule");
  return std::vector<size_t>(schedule, schedule + len);
}

void write_file(const char* path, const std::string& content) {
  require(path, "path");
  const std::filesystem::path p(path);
  const std::filesystem::path parent = p.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot open " + p.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::ios_base::failure("cannot write " + p.string());
}

void emit_poly(riemannlab::Polynomial poly, rml_poly** out) {
  require(out, "output pointer");
  *out = new rml_poly{std::move(poly)};
}

}  // namespace

extern "C" {

const char* rml_version(void) { return "0.1.0"; }

const char* rml_last_error(void) { return g_last_error.c_str(); }

/* ----- polynomials ----- */

rml_status rml_poly_create(const double* coeffs, size_t count,
                           rml_poly** out) {
  return guard([&] {
    if (count > 0) require(coeffs, "coefficient array");
    emit_poly(
        riemannlab::Polynomial(std::vector<double>(coeffs, coeffs + count)),
        out);
  });
}

void rml_poly_free(rml_poly* poly) { delete poly; }

rml_status rml_poly_degree(const rml_poly* poly, int* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = deref(poly, "polynomial").value.degree();
  });
}

rml_status rml_poly_coefficient(const rml_poly* poly, size_t k, double* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = deref(poly, "polynomial").value.coefficient(k);
  });
}

rml_status rml_poly_eval(const rml_poly* poly, double t, double* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = deref(poly, "polynomial").value.eval(t);
  });
}

rml_status rml_poly_sup_norm(const rml_poly* poly, double tol, double* value,
                             double* radius) {
  return guard([&] {
    require(value, "output pointer");
    require(radius, "output pointer");
    const riemannlab::SupNormBound bound =
        riemannlab::sup_norm(deref(poly, "polynomial").value, tol);
    *value = bound.value;
    *radius = bound.radius;
  });
}

rml_status rml_poly_to_csv(const rml_poly* poly, char* buf, size_t cap,
                           size_t* needed) {
  rml_status status = guard([&] {
    require(needed, "output pointer");
    const std::string csv =
        riemannlab::to_csv(deref(poly, "polynomial").value);
    *needed = csv.size() + 1;
    if (buf == nullptr || cap < csv.size() + 1)
      throw std::out_of_range("buffer too small for polynomial CSV");
    std::memcpy(buf, csv.c_str(), csv.size() + 1);
  });
  return status;
}

rml_status rml_poly_from_csv(const char* csv, rml_poly** out) {
  return guard([&] {
    require(csv, "csv string");
    emit_poly(riemannlab::polynomial_from_csv(csv), out);
  });
}

rml_status rml_exp_partial(unsigned n, rml_poly** out) {
  return guard([&] { emit_poly(riemannlab::exp_partial(n), out); });
}

rml_status rml_exp_remainder_sup(unsigned n, double* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = riemannlab::exp_remainder_sup(n);
  });
}

/* ----- the cascade map ----- */

rml_status rml_block_index(double x, unsigned* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = riemannlab::block_index(x);
  });
}

rml_status rml_tent_coefficient(unsigned n, double x, double* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = riemannlab::tent_coefficient(n, x);
  });
}

rml_status rml_f_eval(double x, rml_poly** out) {
  return guard([&] { emit_poly(riemannlab::tent_map(x), out); });
}

rml_status rml_phi(double x, double t, double* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = riemannlab::surface_value(x, t);
  });
}

rml_status rml_block_integral(unsigned n, rml_poly** out) {
  return guard([&] { emit_poly(riemannlab::block_integral(n), out); });
}

rml_status rml_integral_from(double a, rml_poly** out) {
  return guard([&] { emit_poly(riemannlab::integral_from(a), out); });
}

rml_status rml_integral_on(double a, double b, rml_poly** out) {
  return guard([&] { emit_poly(riemannlab::integral_on(a, b), out); });
}

rml_status rml_exact_integral(double a, double b, rml_poly** out) {
  return guard([&] {
    require(out, "output pointer");
    std::optional<riemannlab::Polynomial> poly =
        riemannlab::exact_integral(a, b);
    *out = poly ? new rml_poly{std::move(*poly)} : nullptr;
  });
}

/* ----- partitions and sums ----- */

rml_status rml_regular_partition(double a, double b, size_t n,
                                 rml_tag_rule rule, uint64_t seed,
                                 rml_partition** out) {
  return guard([&] {
    require(out, "output pointer");
    *out = new rml_partition{
        riemannlab::regular_partition(a, b, n, to_tag_rule(rule), seed)};
  });
}

void rml_partition_free(rml_partition* partition) { delete partition; }

rml_status rml_partition_size(const rml_partition* partition, size_t* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = deref(partition, "partition").value.size();
  });
}

rml_status rml_partition_breakpoint(const rml_partition* partition, size_t i,
                                    double* out) {
  return guard([&] {
    require(out, "output pointer");
    const auto& bp = deref(partition, "partition").value.breakpoints();
    *out = bp.at(i);
  });
}

rml_status rml_partition_tag(const rml_partition* partition, size_t i,
                             double* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = deref(partition, "partition").value.tags().at(i);
  });
}

rml_status rml_riemann_sum_f(const rml_partition* partition, rml_poly** out) {
  return guard([&] {
    const riemannlab::PolySupSpace space;
    emit_poly(
        riemannlab::riemann_sum(
            space, [](double x) { return riemannlab::tent_map(x); },
            deref(partition, "partition").value),
        out);
  });
}

rml_status rml_riemann_sum_affine(const rml_partition* partition,
                                  const rml_poly* direction, rml_poly** out) {
  return guard([&] {
    const riemannlab::PolySupSpace space;
    const riemannlab::Polynomial& dir = deref(direction, "direction").value;
    emit_poly(
        riemannlab::riemann_sum(
            space, [&dir](double x) { return riemannlab::scale(x, dir); },
            deref(partition, "partition").value),
        out);
  });
}

/* ----- convergence reports ----- */

rml_status rml_converge_f(double a, double b, double tol,
                          const size_t* schedule, size_t schedule_len,
                          rml_tag_rule rule, uint64_t seed,
                          const rml_poly* reference, rml_report** out) {
  return guard([&] {
    require(out, "output pointer");
    const std::vector<size_t> sched = to_schedule(schedule, schedule_len);
    std::optional<riemannlab::Polynomial> ref;
    if (reference != nullptr) ref = reference->value;
    const riemannlab::PolySupSpace space;
    *out = new rml_report{riemannlab::refine_until_cauchy(
        space, [](double x) { return riemannlab::tent_map(x); }, a, b, tol,
        std::span<const size_t>(sched), to_tag_rule(rule), seed, ref)};
  });
}

void rml_report_free(rml_report* report) { delete report; }

rml_status rml_report_rows(const rml_report* report, size_t* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = deref(report, "report").value.rows.size();
  });
}

rml_status rml_report_row(const rml_report* report, size_t i,
                          rml_converge_row* out) {
  return guard([&] {
    require(out, "output pointer");
    const auto& rows = deref(report, "report").value.rows;
    if (i >= rows.size()) throw std::out_of_range("report row out of range");
    const riemannlab::ConvergenceRow& row = rows[i];
    out->n = row.n;
    out->sum_norm = row.sum_norm;
    out->has_gap = row.gap_prev.has_value() ? 1 : 0;
    out->gap_prev = row.gap_prev.value_or(0.0);
    out->has_dist = row.dist_ref.has_value() ? 1 : 0;
    out->dist_ref = row.dist_ref.value_or(0.0);
  });
}

rml_status rml_report_verdict(const rml_report* report, rml_verdict* out) {
  return guard([&] {
    require(out, "output pointer");
    *out = deref(report, "report").value.verdict ==
                   riemannlab::Verdict::CauchyWithinTolerance
               ? RML_VERDICT_CAUCHY
               : RML_VERDICT_EXHAUSTED;
  });
}

rml_status rml_report_write_csv(const rml_report* report, const char* path) {
  return guard([&] {
    write_file(path, riemannlab::to_csv(deref(report, "report").value));
  });
}

/* ----- emitters ----- */

rml_status rml_emit_surface(unsigned xres, unsigned tres, const char* path,
                            size_t* rows) {
  return guard([&] {
    require(path, "path");
    riemannlab::SurfaceConfig config;
    config.xres = xres;
    config.tres = tres;
    config.out = path;
    const size_t count = riemannlab::run_surface(config);
    if (rows != nullptr) *rows = count;
  });
}

rml_status rml_emit_frames(const char* interval, const size_t* schedule,
                           size_t schedule_len, rml_tag_rule rule,
                           uint64_t seed, unsigned samples,
                           const char* outdir, size_t* frames) {
  return guard([&] {
    require(interval, "interval");
    require(outdir, "output directory");
    riemannlab::FramesConfig config;
    config.interval = riemannlab::parse_interval(interval);
    config.schedule = to_schedule(schedule, schedule_len);
    config.rule = to_tag_rule(rule);
    config.seed = seed;
    config.samples = samples;
    config.outdir = outdir;
    const size_t count = riemannlab::run_frames(config);
    if (frames != nullptr) *frames = count;
  });
}

rml_status rml_emit_converge(const char* interval, const size_t* schedule,
                             size_t schedule_len, rml_tag_rule rule,
                             uint64_t seed, double tol, const char* path,
                             rml_report** out) {
  return guard([&] {
    require(interval, "interval");
    require(path, "path");
    riemannlab::ConvergeConfig config;
    config.interval = riemannlab::parse_interval(interval);
    config.schedule = to_schedule(schedule, schedule_len);
    config.rule = to_tag_rule(rule);
    config.seed = seed;
    config.tol = tol;
    config.out = path;
    riemannlab::ConvergenceReport report = riemannlab::run_converge(config);
    if (out != nullptr) *out = new rml_report{std::move(report)};
  });
}

rml_status rml_emit_chasles(double a, double c, double b, size_t n,
                            rml_tag_rule rule, uint64_t seed,
                            const char* path, rml_chasles_summary* last) {
  return guard([&] {
    require(path, "path");
    riemannlab::ChaslesConfig config;
    config.a = a;
    config.c = c;
    config.b = b;
    config.n = n;
    config.rule = to_tag_rule(rule);
    config.seed = seed;
    config.out = path;
    const std::vector<riemannlab::ChaslesReport> reports =
        riemannlab::run_chasles(config);
    if (last != nullptr && !reports.empty()) {
      const riemannlab::ChaslesReport& r = reports.back();
      last->n = r.n;
      last->discrepancy = r.discrepancy;
      last->total_norm = r.total.sum_norm;
      last->total_degree = r.total.degree;
      last->left_norm = r.left.sum_norm;
      last->left_degree = r.left.degree;
      last->right_norm = r.right.sum_norm;
      last->right_degree = r.right.degree;
      last->has_total_dist = r.total.exact_dist.has_value() ? 1 : 0;
      last->total_dist = r.total.exact_dist.value_or(0.0);
      last->has_left_dist = r.left.exact_dist.has_value() ? 1 : 0;
      last->left_dist = r.left.exact_dist.value_or(0.0);
      last->has_right_dist = r.right.exact_dist.has_value() ? 1 : 0;
      last->right_dist = r.right.exact_dist.value_or(0.0);
    }
  });
}

/* ----- self-verification ----- */

rml_status rml_verify_run(rml_verify_callback callback, void* user,
                          unsigned depth, size_t* failures) {
  return guard([&] {
    require(failures, "output pointer");
    const std::vector<riemannlab::VerifyCheck> checks =
        riemannlab::run_verification(riemannlab::VerifySubject{}, depth);
    size_t failed = 0;
    for (const riemannlab::VerifyCheck& check : checks) {
      if (!check.pass) ++failed;
      if (callback != nullptr)
        callback(check.name.c_str(), check.pass ? 1 : 0,
                 check.detail.c_str(), user);
    }
    *failures = failed;
  });
}

} /* extern "C" */
