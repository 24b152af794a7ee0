#pragma once

#include <string>
#include <vector>

#include "bikraw/linop.hpp"
#include "bikraw/params.hpp"
#include "bikraw/report.hpp"

namespace bikraw {

struct SuiteOptions {
  double tolerance = 1e-9;  // float mode: relative, scaled by matrix max-abs
  Exec exec = Exec::parallel;
  int exact_n_limit = 12;  // exact arithmetic cost grows combinatorially with N
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Stable ids of every registered identity ("ha.1r", "su2.xy", ...).
std::vector<std::string> identity_ids();

/// Ids that belong to a given suite ("all" covers the whole registry).
std::vector<std::string> suite_case_ids(const std::string& suite);

/// Runs every identity in the named suite at size N. Exact mode requires
/// residuals to vanish literally; float mode compares the max-abs residual
/// against tolerance * (max-abs scale of the compared objects). Identities
/// whose structural preconditions need a larger N (e.g. T_{N-2} legs) are
/// omitted from the report at small N.
VerificationReport run_suite(const std::string& suite, int N, const RahmanParams& p, const std::string& mode,
                             const SuiteOptions& opts = {});

/// Random parameter tuples with p_i in [1,9] (denominators up to 4) and
/// p1*p4 != p2*p3; deterministic in the seed.
std::vector<RahmanParams> random_rahman_tuples(int count, unsigned long seed);

}  // namespace bikraw
