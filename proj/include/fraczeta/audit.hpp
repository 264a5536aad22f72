#pragma once

#include <string>
#include <vector>

#include "fraczeta/core.hpp"
#include "fraczeta/gl.hpp"
#include "fraczeta/quadrature.hpp"
#include "fraczeta/report.hpp"

namespace fraczeta {

struct RunConfig {
  SeriesBudget budget;
  QuadratureConfig quadrature;
  GLSchedule gl_schedule;
  enum class Format { Json, Csv } format = Format::Json;
  std::string out_path;  // empty = stdout
  int threads = 0;       // 0 = hardware concurrency
};

// Order-limit sweep: evaluates the named fractional formula over a strictly
// decreasing alpha list and compares with the classical (alpha = 0) target.
// Pass iff residuals strictly decrease and the last is < 100 * tail_tol.
ResidualReport consistency_sweep(const std::string& f_id, Complex s, double a,
                                 const std::vector<double>& alpha_list,
                                 const RunConfig& cfg = {});

std::vector<ResidualReport> audit_classical_baselines(const RunConfig& cfg = {});
std::vector<ResidualReport> audit_cross_method(const RunConfig& cfg = {});
std::vector<ResidualReport> audit_alpha_limits(const RunConfig& cfg = {});
std::vector<ResidualReport> audit_convolution(const RunConfig& cfg = {});
std::vector<ResidualReport> audit_theta_variants(const RunConfig& cfg = {});
std::vector<ResidualReport> audit_integral_bridge(const RunConfig& cfg = {});

// suite_id in {classical-baselines, cross-method, alpha-limits, convolution,
// theta-variants, integral-bridge, all}
std::vector<ResidualReport> run_suite(const std::string& suite_id,
                                      const RunConfig& cfg = {});

std::vector<std::string> suite_ids();

}  // namespace fraczeta
