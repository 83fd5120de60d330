#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "akz/rational.hpp"
#include "akz/real.hpp"

namespace akz {

enum class Status { pass_exact, pass_numeric, fail, skipped_pole, skipped_bad_prime, not_covered };

std::string to_string(Status s);
bool is_pass(Status s);

inline constexpr const char* kReportSchema = "akzkit-report/1";

/// One verified instance of one identity.
struct VerificationReport {
  std::string identity_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string lhs;
  std::string rhs;
  std::optional<std::string> lhs_error;
  std::optional<std::string> rhs_error;
  Status status = Status::not_covered;
  double tolerance = 0.0;
  double elapsed_ms = 0.0;
  std::string note;

  bool passed() const { return is_pass(status); }
  bool failed() const { return status == Status::fail; }
};

using Params = std::vector<std::pair<std::string, std::string>>;

/// pass_exact iff the two rationals are identical.
VerificationReport exact_report(std::string id, Params params, const Rational& lhs,
                                const Rational& rhs);

/// pass_numeric iff |lhs - rhs| <= tol + err(lhs) + err(rhs).
VerificationReport numeric_report(std::string id, Params params, const EvalResult& lhs,
                                  const EvalResult& rhs, double tol);

VerificationReport status_report(std::string id, Params params, Status status, std::string note);

/// Raised when an instance lies outside the families a check can evaluate.
class NotCovered : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluates both sides and compares them; PoleError becomes skipped_pole and
/// NotCovered becomes not_covered. Records the elapsed time.
VerificationReport guarded_numeric(std::string id, Params params, const std::function<EvalResult()>& lhs,
                                   const std::function<EvalResult()>& rhs, double tol);

nlohmann::json to_json(const VerificationReport& r);

/// Full document: schema tag, reports in the given order and per-status counts.
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

/// "pass_exact=3 pass_numeric=10 fail=0 ..." in fixed status order.
std::string summary_line(const std::vector<VerificationReport>& reports);

bool any_failed(const std::vector<VerificationReport>& reports);

}  // namespace akz
