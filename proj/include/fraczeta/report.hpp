#pragma once

#include <string>
#include <vector>

#include "fraczeta/core.hpp"

namespace fraczeta {

struct EvalPoint {
  Complex s{0.0, 0.0};
  double a = 1.0;
  double alpha = 0.0;
};

enum class Verdict { Pass, Fail, DocumentedDiscrepancy, Inconclusive };

const char* verdict_name(Verdict v);

struct PointRecord {
  EvalPoint point;
  double residual = 0.0;
  std::string variant;
  std::string error;  // error kind when the evaluation failed at this point
};

// Per-identity audit record. A documented-discrepancy verdict must carry a
// note naming the paper location that fails as printed.
struct ResidualReport {
  std::string identity_id;
  std::vector<PointRecord> points;
  Verdict verdict = Verdict::Inconclusive;
  double tolerance = 0.0;
  std::string notes;

  bool failed() const { return verdict == Verdict::Fail; }
};

}  // namespace fraczeta
