#include "akz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "akz/ak_zeta.hpp"
#include "akz/level2.hpp"
#include "akz/mzv.hpp"
#include "akz/pbn.hpp"

namespace akz {

namespace {

using Reports = std::vector<VerificationReport>;

const std::vector<std::string>& registry() {
  static const std::vector<std::string> names{
      "pbn.duality",    "pbn.closed",      "pbn.bivariate", "pbn.congruence", "series.lemma41",
      "series.landen",  "akz.symbolic",    "akz.nonpositive", "mzv.duality",  "akz.positive",
      "akz.etaxi",      "akz.symmetry",    "akz.eta_value", "akz.thm49",      "akz.integral",
      "level2.ath",     "level2.ht1",      "level2.thm54",  "level2.thm58",   "level2.integral",
      "level2.zeta_odd"};
  return names;
}

Reports one(VerificationReport r) { return Reports{std::move(r)}; }

Reports instance_report(const std::string& id, const Params& params, const std::exception& e) {
  return one(status_report(id, params, Status::fail, std::string("error: ") + e.what()));
}

// Explicit-family indices of weight <= w.
std::vector<Index> explicit_indices(int w) {
  std::vector<Index> out;
  for (int weight = 1; weight <= w; ++weight)
    for (const Index& k : all_indices(weight))
      if (has_explicit_formula(k)) out.push_back(k);
  return out;
}

void add(std::vector<VerifyTask>& tasks, const std::string& family, std::function<Reports()> f) {
  tasks.push_back(VerifyTask{family, std::move(f)});
}

void build_family(const std::string& fam, const VerifyOptions& o, std::vector<VerifyTask>& t) {
  const int W = o.max_weight;
  const double tol = o.tol;

  if (fam == "pbn.duality") {
    const int max = std::clamp(W + 4, 2, 12);
    add(t, fam, [=] { return duality_check_B(max); });
    add(t, fam, [=] { return duality_check_C(max); });
  } else if (fam == "pbn.closed") {
    const int nmax = std::min(30, 3 * W + 6);
    const int kmax = std::min(8, W);
    for (int k = -kmax; k <= kmax; ++k)
      add(t, fam, [=] {
        Reports out;
        for (int n = 0; n <= nmax; ++n)
          for (auto& r : pbn_closed_form_check(n, k)) out.push_back(std::move(r));
        return out;
      });
  } else if (fam == "pbn.bivariate") {
    const int deg = std::min(10, W + 2);
    add(t, fam, [=] { return one(bivariate_identity_check(deg)); });
  } else if (fam == "pbn.congruence") {
    for (int w = 1; w <= std::min(4, W); ++w)
      for (const Index& k : all_indices(w))
        add(t, fam, [=] {
          Reports out;
          for (long p : {5L, 7L, 11L, 13L}) out.push_back(congruence_check(k, p));
          return out;
        });
  } else if (fam == "series.lemma41") {
    for (const SignedIndex& k : signed_indices(std::min(10, W + 2)))
      add(t, fam, [=] { return one(lemma_4_1_check(k, 25)); });
  } else if (fam == "series.landen") {
    for (int w = 1; w <= std::min(5, W); ++w)
      for (const Index& k : all_indices(w)) add(t, fam, [=] { return one(landen_check(k, 20)); });
  } else if (fam == "akz.symbolic") {
    for (int k = 0; k <= std::min(10, W + 2); ++k) add(t, fam, [=] { return one(eta_symbolic_check(k)); });
  } else if (fam == "akz.nonpositive") {
    const int bound = std::min(6, W);
    for (const SignedIndex& k : signed_indices(bound))
      add(t, fam, [=] {
        Reports out;
        for (int n = 0; n <= bound; ++n)
          for (auto& r : nonpositive_value_check(k, n)) out.push_back(std::move(r));
        return out;
      });
    add(t, fam, [=] {
      Reports out;
      for (int n = 0; n <= bound; ++n)
        for (int k = n; k <= bound; ++k)
          for (auto& r : nonpositive_duality_check(n, k)) out.push_back(std::move(r));
      return out;
    });
  } else if (fam == "mzv.duality") {
    for (int w = 2; w <= W; ++w)
      for (const Index& k : admissible_indices(w))
        if (k <= dual(k)) add(t, fam, [=] { return one(mzv_duality_check(k, tol)); });
  } else if (fam == "akz.positive") {
    for (int k = 1; k <= 4; ++k)
      for (int m = 1; m <= 4 && k + m <= W; ++m)
        add(t, fam, [=] {
          const Params p{{"k", std::to_string(k)}, {"m", std::to_string(m)}};
          Reports out;
          out.push_back(guarded_numeric(
              "akz.xi_corollary", p, [=] { return xi_at_positive(Index{k}, m); },
              [=] { return xi_corollary(k, m); }, tol));
          out.push_back(guarded_numeric(
              "akz.eta_corollary", p, [=] { return eta_at_positive(Index{k}, m); },
              [=] { return eta_corollary(k, m); }, tol));
          return out;
        });
    for (const Index& k : explicit_indices(W))
      for (int s = 2; s <= 3 && k.weight() + s <= W; ++s)
        add(t, fam, [=] {
          return one(guarded_numeric(
              "akz.xi_explicit", {{"index", k.to_string()}, {"s", std::to_string(s)}},
              [=] { return xi_at_positive(k, s); }, [=] { return xi_explicit(k, s); }, tol));
        });
    for (int s = 2; s <= 3 && s + 4 <= W; ++s)
      add(t, fam, [=] {
        return one(guarded_numeric(
            "akz.example39", {{"s", std::to_string(s)}}, [=] { return xi_example_3_9(s); },
            [=] { return xi_at_positive(Index{2, 1, 1}, s); }, tol));
      });
  } else if (fam == "akz.etaxi") {
    for (int w = 1; w <= std::min(5, W); ++w)
      for (const Index& k : all_indices(w))
        for (int m = 1; m <= 3; ++m) add(t, fam, [=] { return etaxi_relation_check(k, m, tol); });
  } else if (fam == "akz.symmetry") {
    for (int k = 1; k <= 4; ++k)
      for (int m = k + 1; m <= 4 && k + m <= W; ++m)
        add(t, fam, [=] { return one(eta_symmetry_check(k, m, tol)); });
  } else if (fam == "akz.eta_value") {
    for (int k = 1; k <= 4; ++k)
      for (int m = 1; m <= 4 && k + m <= W; ++m)
        add(t, fam, [=] { return eta_value_formulas_check(k, m, tol); });
  } else if (fam == "akz.thm49") {
    for (int k = 1; k <= 4; ++k)
      for (int n = k; n <= 4 && k + n <= W; ++n) add(t, fam, [=] { return one(theorem_4_9_check(k, n, tol)); });
    if (W >= 5) add(t, fam, [=] { return one(example_4_10_check(tol)); });
  } else if (fam == "akz.integral") {
    for (int k = 1; k <= 3; ++k)
      for (int s = 1; s <= 3 && k + s <= W; ++s)
        add(t, fam, [=] { return one(xi_depth1_integral_check(k, s, tol)); });
  } else if (fam == "level2.ath") {
    add(t, fam, [=] { return one(ath_series_identities(std::min(40, 5 * W))); });
  } else if (fam == "level2.ht1") {
    for (int r = 1; r <= 4; ++r)
      for (int k = 1; k <= 4 && r + k <= W; ++k)
        add(t, fam, [=] { return one(height_one_duality_check(r, k, tol)); });
  } else if (fam == "level2.thm54") {
    for (int r = 1; r <= 3; ++r)
      for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 3 && r + k + m <= W + 1; ++m)
          add(t, fam, [=] { return one(theorem_5_4_check(r, k, m, tol)); });
  } else if (fam == "level2.thm58") {
    for (int m = 1; m <= 6; ++m)
      for (int r = 1; r <= 6; ++r)
        for (int k = 2; m + r + k <= std::min(8, W); ++k)
          add(t, fam, [=] { return one(theorem_5_8_check(m, r, k, tol)); });
    for (int m = 1; m <= 4 && m + 3 <= std::max(W, 4); ++m)
      add(t, fam, [=] { return one(example_5_9_check(m, tol)); });
  } else if (fam == "level2.integral") {
    for (int k = 2; k <= 3; ++k)
      for (int s = 1; s <= 2 && k + s <= W; ++s)
        add(t, fam, [=] { return one(psi_depth1_integral_check(k, s, tol)); });
  } else if (fam == "level2.zeta_odd") {
    for (int s = 2; s <= std::min(8, W); ++s) add(t, fam, [=] { return one(zeta_odd_check(s, tol)); });
  }
}

}  // namespace

std::vector<std::string> family_names() { return registry(); }

bool family_selected(const std::string& family, const std::vector<std::string>& filter) {
  if (filter.empty()) return true;
  for (const std::string& f : filter)
    if (family == f || family.rfind(f + ".", 0) == 0) return true;
  return false;
}

std::vector<VerifyTask> build_tasks(const VerifyOptions& opts) {
  std::vector<VerifyTask> tasks;
  for (const std::string& fam : registry())
    if (family_selected(fam, opts.families)) build_family(fam, opts, tasks);
  return tasks;
}

std::vector<VerificationReport> run_tasks(const std::vector<VerifyTask>& tasks, int jobs) {
  std::vector<Reports> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = tasks[i].run();
      } catch (const std::exception& e) {
        slots[i] = instance_report(tasks[i].family, {}, e);
      }
    }
  };
  const int n = std::clamp(jobs, 1, 64);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<VerificationReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opts) {
  return run_tasks(build_tasks(opts), opts.jobs);
}

VerificationReport mzv_duality_check(const Index& k, double tol) {
  const Index d = dual(k);
  return guarded_numeric(
      "mzv.duality", {{"index", k.to_string()}, {"dual", d.to_string()}}, [&] { return mzv(k); },
      [&] { return mzv_split(d, Rational(1, 3)); }, tol);
}

std::vector<VerificationReport> pbn_closed_form_check(int n, int k) {
  const Params p{{"n", std::to_string(n)}, {"k", std::to_string(k)}};
  return {exact_report("pbn.closed.B", p, poly_bernoulli_B(n, k), poly_bernoulli_B_closed(n, k)),
          exact_report("pbn.closed.C", p, poly_bernoulli_C(n, k), poly_bernoulli_C_closed(n, k))};
}

std::vector<SignedIndex> signed_indices(int bound) {
  std::vector<SignedIndex> out;
  for (int r = 1; r <= bound; ++r)
    for (int w = 0; w + r <= bound; ++w)
      for (const Composition& c : compositions(w, r)) out.emplace_back(c.parts);
  return out;
}

}  // namespace akz
