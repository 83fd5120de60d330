#include "akz/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "akz/ak_zeta.hpp"
#include "akz/level2.hpp"
#include "akz/mzv.hpp"
#include "akz/pbn.hpp"
#include "akz/verify.hpp"

namespace akz {

namespace {

constexpr int kMaxIndexWeight = 24;
constexpr int kMaxPbnOrder = 200;
constexpr int kMaxPbnExponent = 60;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  double tol = -1;  // negative: command default
  unsigned prec_bits = 256;
  int max_weight = 8;
  std::string json_path;
  int jobs = 1;
  bool perturb = false;
  std::string perturb_index = "1,2";
  bool verbose = false;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

Index parse_positive(const std::string& text) {
  Index k = Index::parse(text);
  require(k.weight() <= kMaxIndexWeight, "index weight exceeds " + std::to_string(kMaxIndexWeight));
  return k;
}

bool is_negative_syntax(const std::string& text) { return text.rfind("neg:", 0) == 0; }

void write_json(const std::string& path, const nlohmann::json& doc) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << doc.dump(2) << "\n";
}

void print_value(std::ostream& out, const std::string& label, const EvalResult& v) {
  out << label << " = " << to_decimal(v.value, 40) << "\n"
      << "error <= " << to_sci(v.error) << "\n"
      << "method = " << v.method << "\n";
}

nlohmann::json value_json(const std::string& label, const EvalResult& v) {
  return {{"schema", kReportSchema},
          {"quantity", label},
          {"value", to_decimal(v.value, 40)},
          {"error", to_sci(v.error)},
          {"method", v.method}};
}

int emit_value(std::ostream& out, const Globals& g, const std::string& label, const EvalResult& v) {
  print_value(out, label, v);
  write_json(g.json_path, value_json(label, v));
  return kExitOk;
}

int emit_exact(std::ostream& out, const Globals& g, const std::string& label, const std::string& value) {
  out << value << "\n";
  write_json(g.json_path, {{"schema", kReportSchema}, {"quantity", label}, {"value", value}});
  return kExitOk;
}

int emit_reports(std::ostream& out, const Globals& g, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!g.verbose && r.passed()) continue;
    out << to_string(r.status) << " " << r.identity_id;
    for (const auto& [k, v] : r.parameters) out << " " << k << "=" << v;
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
  }
  out << "total=" << reports.size() << " " << summary_line(reports) << "\n";
  write_json(g.json_path, to_json(reports));
  return any_failed(reports) ? kExitFail : kExitOk;
}

std::string known_family(const std::string& prefix, const std::string& name) {
  std::vector<std::string> candidates{name};
  if (!prefix.empty()) candidates.push_back(prefix + "." + name);
  for (const std::string& f : candidates)
    for (const std::string& known : family_names())
      if (family_selected(known, {f})) return f;
  throw UsageError("unknown family '" + name + "'");
}

void apply_settings(const Globals& g, std::optional<double> mzv_tol) {
  require(g.prec_bits >= 64 && g.prec_bits <= 4096, "--prec-bits must lie in [64, 4096]");
  NumericSettings s;
  s.prec_bits = g.prec_bits;
  if (mzv_tol) {
    require(*mzv_tol > 0 && *mzv_tol < 1, "--tol must lie in (0, 1)");
    s.mzv_tol = std::min(s.mzv_tol, *mzv_tol);
  }
  if (g.perturb) s.perturbed_mzv = Index::parse(g.perturb_index);
  configure(s);
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poly-Bernoulli numbers, multiple zeta values and the xi/eta zeta functions", "akzkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Tolerance (evaluation or comparison, per command)");
  app.add_option("--prec-bits", g.prec_bits, "Working precision in bits")->capture_default_str();
  app.add_option("--max-weight", g.max_weight, "Weight budget for verification sweeps")->capture_default_str();
  app.add_option("--json", g.json_path, "Write the full result as JSON to FILE");
  app.add_option("--jobs", g.jobs, "Worker threads for verification sweeps")->capture_default_str();
  app.add_flag("--verbose", g.verbose, "List passing instances too");
  app.add_flag("--inject-perturbation", g.perturb)->group("");
  app.add_option("--perturb-index", g.perturb_index)->group("");

  // pbn
  auto* pbn = app.add_subcommand("pbn", "Poly-Bernoulli numbers");
  std::string kind = "B";
  std::optional<int> pbn_n, pbn_k;
  std::string pbn_index;
  pbn->add_option("--kind", kind, "B or C")->check(CLI::IsMember({"B", "C"}))->capture_default_str();
  pbn->add_option("--n", pbn_n, "Order n >= 0");
  pbn->add_option("--k", pbn_k, "Upper index k (may be negative)");
  pbn->add_option("--index", pbn_index, "Multi-index k1,k2,... or neg:k1,k2,...");
  pbn->require_subcommand(0, 1);
  auto* pbn_verify = pbn->add_subcommand("verify", "Exact identity checks");
  pbn_verify->require_subcommand(1);
  auto* pbn_dual = pbn_verify->add_subcommand("duality", "B and C duality");
  int dual_max = 12;
  pbn_dual->add_option("--max", dual_max, "Largest n, k")->capture_default_str();

  // mzv, tval
  auto* mzv_cmd = app.add_subcommand("mzv", "Multiple zeta value");
  std::string mzv_index;
  bool star = false;
  mzv_cmd->add_option("index", mzv_index, "k1,k2,...")->required();
  mzv_cmd->add_flag("--star", star, "Zeta-star value");
  auto* tval = app.add_subcommand("tval", "Level-2 value T(k) = 2^r T_0(k)");
  std::string t_index;
  bool t0 = false;
  tval->add_option("index", t_index, "k1,k2,...")->required();
  tval->add_flag("--t0", t0, "Print T_0 instead of T");

  // akzeta
  auto* ak = app.add_subcommand("akzeta", "The xi and eta zeta functions");
  ak->require_subcommand(1);
  std::string ak_index;
  std::optional<int> ak_at;
  bool symbolic = false;
  auto setup_fn = [&](CLI::App* c) {
    c->add_option("--index", ak_index, "k1,k2,... or neg:k1,k2,...")->required();
    c->add_option("--at", ak_at, "Integer argument s");
    c->add_flag("--symbolic", symbolic, "Dirichlet polynomial in s (nonpositive indices)");
  };
  auto* ak_xi = ak->add_subcommand("xi", "xi(k; s); xi~ for nonpositive indices");
  auto* ak_eta = ak->add_subcommand("eta", "eta(k; s)");
  setup_fn(ak_xi);
  setup_fn(ak_eta);
  auto* ak_verify = ak->add_subcommand("verify", "Run one verification family");
  std::string ak_family;
  ak_verify->add_option("family", ak_family, "Family name, e.g. etaxi or thm49")->required();

  // level2
  auto* l2 = app.add_subcommand("level2", "Level-2 functions");
  l2->require_subcommand(1);
  auto* l2_psi = l2->add_subcommand("psi", "psi(1^{r-1}, k; s) at a positive integer s");
  int psi_r = 1, psi_k = 1, psi_at = 1;
  l2_psi->add_option("--r", psi_r)->required();
  l2_psi->add_option("--k", psi_k)->required();
  l2_psi->add_option("--at", psi_at)->required();
  auto* l2_verify = l2->add_subcommand("verify", "Run one verification family");
  std::string l2_family;
  std::optional<int> l2_max;
  l2_verify->add_option("family", l2_family, "Family name, e.g. ht1 or thm54")->required();
  l2_verify->add_option("--max", l2_max, "Largest r, k (ht1 only)");

  // verify-all
  auto* all = app.add_subcommand("verify-all", "Every identity family within the budget");
  std::vector<std::string> families;
  all->add_option("--family", families, "Restrict to these families or prefixes");
  bool list = false;
  all->add_flag("--list", list, "Print the family names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    require(g.max_weight >= 1 && g.max_weight <= kMaxWeightLimit,
            "--max-weight must lie in [1, " + std::to_string(kMaxWeightLimit) + "]");
    require(g.jobs >= 1 && g.jobs <= 64, "--jobs must lie in [1, 64]");
    require(g.tol < 0 || (g.tol > 0 && g.tol < 1), "--tol must lie in (0, 1)");
    const double verify_tol = g.tol > 0 ? g.tol : 1e-8;

    auto sweep = [&](std::vector<std::string> fams) {
      apply_settings(g, std::nullopt);
      VerifyOptions o;
      o.max_weight = g.max_weight;
      o.tol = verify_tol;
      o.jobs = g.jobs;
      o.families = std::move(fams);
      return emit_reports(out, g, verify_all(o));
    };

    if (*pbn) {
      apply_settings(g, std::nullopt);
      if (*pbn_verify) {
        require(dual_max >= 0 && dual_max <= 40, "--max must lie in [0, 40]");
        auto reports = duality_check_B(dual_max);
        for (auto& r : duality_check_C(dual_max)) reports.push_back(std::move(r));
        return emit_reports(out, g, reports);
      }
      require(pbn_n.has_value(), "pbn needs --n");
      require(*pbn_n >= 0 && *pbn_n <= kMaxPbnOrder, "--n must lie in [0, " + std::to_string(kMaxPbnOrder) + "]");
      require(pbn_k.has_value() != !pbn_index.empty(), "pbn needs exactly one of --k and --index");
      const PbKind pk = kind == "B" ? PbKind::B : PbKind::C;
      Rational v;
      if (pbn_k) {
        require(std::abs(*pbn_k) <= kMaxPbnExponent, "|k| exceeds " + std::to_string(kMaxPbnExponent));
        v = pk == PbKind::B ? poly_bernoulli_B(*pbn_n, *pbn_k) : poly_bernoulli_C(*pbn_n, *pbn_k);
      } else if (is_negative_syntax(pbn_index)) {
        const SignedIndex k = SignedIndex::parse(pbn_index);
        require(k.weight() <= kMaxPbnExponent, "index weight exceeds budget");
        v = multi_poly_bernoulli(*pbn_n, k, pk);
      } else {
        v = multi_poly_bernoulli(*pbn_n, parse_positive(pbn_index), pk);
      }
      return emit_exact(out, g, kind + "_" + std::to_string(*pbn_n), to_string(v));
    }

    if (*mzv_cmd) {
      apply_settings(g, g.tol > 0 ? std::optional<double>(g.tol) : std::nullopt);
      const Index k = parse_positive(mzv_index);
      require(is_admissible(k), "index must be admissible (last part >= 2)");
      return emit_value(out, g, std::string(star ? "zeta*(" : "zeta(") + k.to_string() + ")",
                        star ? mzsv(k) : mzv(k));
    }

    if (*tval) {
      apply_settings(g, std::nullopt);
      const Index k = parse_positive(t_index);
      require(is_admissible(k), "index must be admissible (last part >= 2)");
      return emit_value(out, g, std::string(t0 ? "T_0(" : "T(") + k.to_string() + ")",
                        t0 ? t0_value(k) : t_value(k));
    }

    if (*ak) {
      if (*ak_verify) return sweep({known_family("akz", ak_family)});
      apply_settings(g, std::nullopt);
      const bool xi = ak_xi->parsed();
      const std::string name = xi ? "xi" : "eta";
      if (is_negative_syntax(ak_index)) {
        const SignedIndex k = SignedIndex::parse(ak_index);
        require(k.weight() <= kMaxPbnExponent, "index weight exceeds budget");
        const DirichletPolynomial p = xi ? xitilde_closed(k) : eta_closed_nonpositive(k);
        const std::string label = (xi ? "xi~(" : "eta(") + k.to_string() + "; s)";
        if (symbolic || !ak_at) return emit_exact(out, g, label, p.to_string());
        return emit_exact(out, g, label + " at s=" + std::to_string(*ak_at), to_string(p.at(*ak_at)));
      }
      const Index k = parse_positive(ak_index);
      require(!symbolic, "--symbolic applies to nonpositive indices");
      require(ak_at.has_value(), "--at is required");
      const int s = *ak_at;
      const std::string label = name + "(" + k.to_string() + "; " + std::to_string(s) + ")";
      if (s <= 0) {
        require(-s <= kMaxPbnOrder, "argument out of budget");
        const Rational v = xi ? xi_nonpositive(k, -s) : eta_nonpositive_value(k, -s);
        return emit_exact(out, g, label, to_string(v));
      }
      require(k.weight() + s <= kMaxIndexWeight, "weight + s exceeds budget");
      return emit_value(out, g, label, xi ? xi_at_positive(k, s) : eta_at_positive(k, s));
    }

    if (*l2) {
      if (*l2_psi) {
        apply_settings(g, std::nullopt);
        require(psi_r >= 1 && psi_k >= 1 && psi_at >= 1, "--r, --k and --at must be >= 1");
        require(psi_r + psi_k + psi_at <= kMaxIndexWeight, "r + k + s exceeds budget");
        return emit_value(out, g,
                          "psi(r=" + std::to_string(psi_r) + ", k=" + std::to_string(psi_k) +
                              "; " + std::to_string(psi_at) + ")",
                          psi_at_positive(psi_r, psi_k, psi_at - 1));
      }
      if (l2_max) {
        require(l2_family == "ht1" || l2_family == "level2.ht1", "--max applies to ht1 only");
        require(*l2_max >= 1 && *l2_max <= 8, "--max must lie in [1, 8]");
        apply_settings(g, std::nullopt);
        std::vector<VerifyTask> tasks;
        for (int r = 1; r <= *l2_max; ++r)
          for (int k = 1; k <= *l2_max; ++k)
            tasks.push_back({"level2.ht1", [=] {
                               return std::vector<VerificationReport>{height_one_duality_check(r, k, verify_tol)};
                             }});
        return emit_reports(out, g, run_tasks(tasks, g.jobs));
      }
      return sweep({known_family("level2", l2_family)});
    }

    if (*all) {
      if (list) {
        for (const auto& f : family_names()) out << f << "\n";
        return kExitOk;
      }
      for (const auto& f : families) known_family("", f);
      return sweep(families);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace akz
