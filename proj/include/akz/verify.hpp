#pragma once

#include <functional>
#include <string>
#include <vector>

#include "akz/report.hpp"

namespace akz {

struct VerifyOptions {
  /// Weight budget; every family scales its parameter grid from this.
  int max_weight = 8;
  double tol = 1e-8;
  int jobs = 1;
  /// Family names or dotted prefixes ("akz", "level2.ht1"); empty runs all.
  std::vector<std::string> families;
};

inline constexpr int kMaxWeightLimit = 12;

struct VerifyTask {
  std::string family;
  std::function<std::vector<VerificationReport>()> run;
};

/// Every registered family, in suite order.
std::vector<std::string> family_names();
bool family_selected(const std::string& family, const std::vector<std::string>& filter);

/// Expands the selected families into tasks, in deterministic order.
std::vector<VerifyTask> build_tasks(const VerifyOptions& opts);

/// Runs the tasks on a pool of `jobs` workers; the output keeps task order.
std::vector<VerificationReport> run_tasks(const std::vector<VerifyTask>& tasks, int jobs);

std::vector<VerificationReport> verify_all(const VerifyOptions& opts);

/// zeta(k) from the default evaluator against zeta(k*) split at 1/3.
VerificationReport mzv_duality_check(const Index& k, double tol);

/// B_n^{(k)} and C_n^{(k)} from the generating series against the Stirling
/// closed forms.
std::vector<VerificationReport> pbn_closed_form_check(int n, int k);

/// Signed indices (-k_1, ..., -k_r) with weight + depth <= bound.
std::vector<SignedIndex> signed_indices(int bound);

}  // namespace akz
