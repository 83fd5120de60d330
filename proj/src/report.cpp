#include "akz/report.hpp"

#include <array>
#include <chrono>
#include <sstream>

namespace akz {

namespace {

constexpr std::array kAllStatuses{Status::pass_exact,   Status::pass_numeric,
                                  Status::fail,         Status::skipped_pole,
                                  Status::skipped_bad_prime, Status::not_covered};

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass_exact:
      return "pass_exact";
    case Status::pass_numeric:
      return "pass_numeric";
    case Status::fail:
      return "fail";
    case Status::skipped_pole:
      return "skipped_pole";
    case Status::skipped_bad_prime:
      return "skipped_bad_prime";
    case Status::not_covered:
      return "not_covered";
  }
  return "unknown";
}

bool is_pass(Status s) { return s == Status::pass_exact || s == Status::pass_numeric; }

VerificationReport exact_report(std::string id, Params params, const Rational& lhs,
                                const Rational& rhs) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.status = lhs == rhs ? Status::pass_exact : Status::fail;
  return r;
}

VerificationReport numeric_report(std::string id, Params params, const EvalResult& lhs,
                                  const EvalResult& rhs, double tol) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  r.lhs = to_decimal(lhs.value);
  r.rhs = to_decimal(rhs.value);
  r.lhs_error = to_sci(lhs.error);
  r.rhs_error = to_sci(rhs.error);
  r.tolerance = tol;
  r.status = agrees(lhs, rhs, tol) ? Status::pass_numeric : Status::fail;
  if (r.status == Status::fail) r.note = "difference " + to_sci(abs(lhs.value - rhs.value));
  return r;
}

VerificationReport status_report(std::string id, Params params, Status status, std::string note) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  r.status = status;
  r.note = std::move(note);
  return r;
}

VerificationReport guarded_numeric(std::string id, Params params, const std::function<EvalResult()>& lhs,
                                   const std::function<EvalResult()>& rhs, double tol) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  try {
    r = numeric_report(id, params, lhs(), rhs(), tol);
  } catch (const PoleError& e) {
    r = status_report(id, params, Status::skipped_pole, e.what());
    r.tolerance = tol;
  } catch (const NotCovered& e) {
    r = status_report(id, params, Status::not_covered, e.what());
    r.tolerance = tol;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  nlohmann::json j{{"identity_id", r.identity_id},
                   {"parameters", params},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"status", to_string(r.status)},
                   {"tolerance", r.tolerance},
                   {"elapsed_ms", r.elapsed_ms}};
  j["lhs_error"] = r.lhs_error ? nlohmann::json(*r.lhs_error) : nlohmann::json(nullptr);
  j["rhs_error"] = r.rhs_error ? nlohmann::json(*r.rhs_error) : nlohmann::json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  nlohmann::json counts = nlohmann::json::object();
  for (Status s : kAllStatuses) counts[to_string(s)] = 0;
  for (const auto& r : reports) counts[to_string(r.status)] = counts[to_string(r.status)].get<int>() + 1;
  return nlohmann::json{{"schema", kReportSchema}, {"reports", arr}, {"summary", counts}};
}

std::string summary_line(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  bool first = true;
  for (Status s : kAllStatuses) {
    int n = 0;
    for (const auto& r : reports) n += r.status == s;
    os << (first ? "" : " ") << to_string(s) << '=' << n;
    first = false;
  }
  return os.str();
}

bool any_failed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.failed()) return true;
  return false;
}

}  // namespace akz
