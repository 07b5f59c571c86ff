// symbell: exact polytope geometry and quantum violation toolkit for
// symmetric two-body Bell inequalities.
//
// Exit codes: 0 success (including "no violation"), 1 usage error,
// 2 precondition violation, 3 internal consistency failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include "symbell/boundary.hpp"
#include "symbell/bounds.hpp"
#include "symbell/families.hpp"
#include "symbell/io.hpp"
#include "symbell/lmg.hpp"
#include "symbell/polytope.hpp"
#include "symbell/quantum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using symbell::i64;
using symbell::json;

struct GlobalOpts {
  std::string format = "json";
  std::string out;
  int threads = 0;
  long long seed = 0;  // reserved: v1 has no randomized algorithms
};

// Emits payload (stdout or --out) plus the run manifest (stderr or
// <out>.manifest.json). The manifest timestamp is the only run-dependent
// byte; payloads are deterministic functions of (command, parameters).
void emit(const GlobalOpts& g, const std::string& command, json parameters,
          const std::string& payload) {
  const symbell::RunManifest manifest =
      symbell::make_manifest(command, std::move(parameters), payload);
  if (g.out.empty()) {
    std::cout << payload;
    std::cerr << manifest.to_json().dump() << "\n";
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw symbell::precondition_error("cannot open output file " + g.out);
  f << payload;
  f.close();
  std::ofstream mf(g.out + ".manifest.json", std::ios::binary);
  if (!mf)
    throw symbell::precondition_error("cannot open manifest file " + g.out +
                                      ".manifest.json");
  mf << manifest.to_json().dump(2) << "\n";
}

json ineq_report(const symbell::BellInequality& q) { return symbell::to_json(q); }

std::string format_double(double v) { return json(v).dump(); }

// ---------------------------------------------------------------- vertices
void run_vertices(const GlobalOpts& g, i64 n) {
  const auto with_counts = symbell::vertices_with_counts(n);
  std::string payload;
  if (g.format == "csv") {
    payload = "s0,s1,s00,s01,s11\n";
    for (const auto& [t, v] : with_counts) {
      payload += std::to_string(v.s0) + ',' + std::to_string(v.s1) + ',' +
                 std::to_string(v.s00) + ',' + std::to_string(v.s01) + ',' +
                 std::to_string(v.s11) + '\n';
    }
  } else {
    json j;
    j["schema"] = symbell::kSchema;
    j["command"] = "vertices";
    j["n"] = symbell::json_int(n);
    j["count"] = symbell::json_int(static_cast<i64>(with_counts.size()));
    json arr = json::array();
    for (const auto& [t, v] : with_counts) {
      json rec = symbell::to_json(v);
      rec["counts"] = symbell::to_json(t);
      arr.push_back(std::move(rec));
    }
    j["vertices"] = std::move(arr);
    payload = j.dump(2) + "\n";
  }
  emit(g, "vertices", json{{"n", n}, {"format", g.format}}, payload);
}

// ------------------------------------------------------------------ facets
struct TableRef {
  i64 total, class_b;
};
std::optional<TableRef> reference_counts(i64 n) {
  switch (n) {
    case 5: return TableRef{152, 16};
    case 10: return TableRef{2018, 272};
    case 15: return TableRef{7744, 1208};
    case 20: return TableRef{21274, 3592};
    default: return std::nullopt;
  }
}

void run_facets(const GlobalOpts& g, i64 n) {
  const symbell::FacetList fl = symbell::facets(n);
  const symbell::ClassifyResult cls = symbell::classify_facets_as_class_b(fl);
  const auto ref = reference_counts(n);
  if (!ref)
    std::cerr << "note: no built-in reference facet counts for n=" << n
              << "; skipping comparison\n";

  json summary;
  summary["total"] = symbell::json_int(static_cast<i64>(fl.facets.size()));
  summary["class_b"] = symbell::json_int(cls.matched);
  if (ref) {
    summary["reference_total"] = symbell::json_int(ref->total);
    summary["reference_class_b"] = symbell::json_int(ref->class_b);
    const bool ok = ref->total == static_cast<i64>(fl.facets.size()) &&
                    ref->class_b == cls.matched;
    summary["matches_reference"] = ok;
    if (!ok)
      throw symbell::internal_error(
          "facet counts disagree with the reference table at n=" +
          std::to_string(n));
  }

  std::string payload;
  if (g.format == "csv") {
    payload = symbell::facets_to_csv(fl);
    std::cerr << "summary: " << summary.dump() << "\n";
  } else {
    json j;
    j["schema"] = symbell::kSchema;
    j["command"] = "facets";
    j["n"] = symbell::json_int(n);
    j["vertex_count"] = symbell::json_int(fl.vertex_count);
    json arr = json::array();
    for (const auto& f : fl.facets) arr.push_back(symbell::to_json(f));
    j["facets"] = std::move(arr);
    j["summary"] = summary;
    payload = j.dump(2) + "\n";
  }
  emit(g, "facets", json{{"n", n}, {"format", g.format}}, payload);
}

// ------------------------------------------------------------------- bound
void run_bound(const GlobalOpts& g, i64 n, const std::string& family,
               i64 alpha, i64 beta, i64 gamma, i64 delta, i64 epsilon,
               bool bruteforce) {
  json j;
  j["schema"] = symbell::kSchema;
  j["command"] = "bound";
  j["n"] = symbell::json_int(n);

  symbell::BellInequality q;
  i64 scale = 1;
  if (family == "dicke") {
    const symbell::DickeFamily fam = symbell::dicke_family(n);
    q = fam.ineq;
    scale = fam.scale;
    j["family"] = "dicke";
    j["scale"] = symbell::json_int(scale);
  } else {
    q = symbell::BellInequality{n, alpha, beta, gamma, delta, epsilon, 0};
  }

  const symbell::BoundResult res = symbell::classical_bound_exact(
      q.alpha, q.beta, q.gamma, q.delta, q.epsilon, n);
  q.beta_c = res.beta_c_is_integer() ? res.beta_c().integer() : 0;

  // Family-normalized bound: the stored integer inequality for odd-n Dicke
  // carries doubled coefficients, so divide the bound by the scale.
  if (scale != 1) {
    if (res.beta_c2 % (2 * scale) != 0)
      throw symbell::internal_error("family bound is not divisible by its scale");
    j["beta_c"] = symbell::json_int(res.beta_c2 / (2 * scale));
    j["stored_beta_c"] = res.beta_c_is_integer()
                             ? symbell::json_int(res.beta_c().integer())
                             : json(res.beta_c().str());
  } else {
    j["beta_c"] = res.beta_c_is_integer()
                      ? symbell::json_int(res.beta_c().integer())
                      : json(res.beta_c().str());
  }
  j["ineq"] = ineq_report(q);
  json mins = json::array();
  for (const auto& t : res.minimizers) mins.push_back(symbell::to_json(t));
  j["minimizers"] = std::move(mins);

  if (bruteforce) {
    const symbell::HalfInt bf = symbell::classical_bound_bruteforce(
        q.alpha, q.beta, q.gamma, q.delta, q.epsilon, n);
    j["bruteforce_beta_c"] =
        bf.is_integer() ? symbell::json_int(bf.integer()) : json(bf.str());
    if (bf.twice != res.beta_c2)
      throw symbell::internal_error(
          "brute-force bound disagrees with the exact vertex scan");
    j["bruteforce_matches"] = true;
  }

  json params{{"n", n}, {"bruteforce", bruteforce}};
  if (family == "dicke") params["family"] = "dicke";
  else
    params.update(json{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma},
                       {"delta", delta}, {"epsilon", epsilon}});
  emit(g, "bound", std::move(params), j.dump(2) + "\n");
}

// -------------------------------------------------------------- classbuild
void run_classbuild(const GlobalOpts& g, i64 n, i64 x, i64 y, int sigma, i64 mu,
                    int branch, bool check_tight) {
  const symbell::ClassBParams p{x, y, sigma, mu, branch,
                                std::gcd(x, y) == 1};
  if (auto why = symbell::class_b_rejection(p, n))
    throw symbell::precondition_error("inadmissible parameters " + *why);
  const symbell::BellInequality q = symbell::class_b_build(p, n);

  json j;
  j["schema"] = symbell::kSchema;
  j["command"] = "classbuild";
  j["n"] = symbell::json_int(n);
  j["params"] = json{{"x", x}, {"y", y}, {"sigma", sigma}, {"mu", mu},
                     {"branch", branch}, {"coprime", p.coprime}};
  j["ineq"] = ineq_report(q);
  j["beta_c"] = symbell::json_int(q.beta_c);
  if (check_tight) {
    const symbell::TightnessReport rep = symbell::is_tight(q);
    j["tightness"] = rep.status == symbell::Tightness::tight       ? "tight"
                     : rep.status == symbell::Tightness::not_tight ? "not_tight"
                                                                   : "invalid";
    j["affine_dimension"] = rep.affine_dimension;
    j["saturating_count"] =
        symbell::json_int(static_cast<i64>(rep.saturating_counts.size()));
  }
  emit(g, "classbuild",
       json{{"n", n}, {"x", x}, {"y", y}, {"sigma", sigma}, {"mu", mu},
            {"branch", branch}, {"check_tight", check_tight}},
       j.dump(2) + "\n");
}

// ----------------------------------------------------------------- violate
symbell::BellInequality ineq6(i64 n) {
  return symbell::class_b_build({1, 1, -1, 0, -1, true}, n);
}

void run_violate(const GlobalOpts& g, i64 n, const std::string& family,
                 bool use_ineq6, i64 alpha, i64 beta, i64 gamma, i64 delta,
                 i64 epsilon, double theta, bool theta_given,
                 const std::string& figure, bool force_operator, i64 n_min,
                 i64 n_step) {
  const bool family_mode = family == "dicke";
  const bool expectation_mode = family_mode && !force_operator;

  auto build = [&](i64 parties) -> std::pair<symbell::BellInequality, i64> {
    if (family_mode) {
      const symbell::DickeFamily fam = symbell::dicke_family(parties);
      return {fam.ineq, fam.scale};
    }
    if (use_ineq6) return {ineq6(parties), 1};
    symbell::BellInequality q{parties, alpha, beta, gamma, delta, epsilon, 0};
    const symbell::BoundResult res = symbell::classical_bound_exact(
        alpha, beta, gamma, delta, epsilon, parties);
    if (!res.beta_c_is_integer())
      throw symbell::precondition_error(
          "half-integer classical bound; double the coefficients");
    q.beta_c = res.beta_c().integer();
    return {q, 1};
  };

  auto optimum = [&](const symbell::BellInequality& q,
                     i64 scale) -> symbell::ThetaOptimum {
    symbell::ThetaOptimum opt;
    if (theta_given) {
      const double v =
          expectation_mode
              ? symbell::dicke_expectation(q, {theta}, (q.n + 1) / 2)
              : symbell::min_eigenvalue(symbell::bell_operator_sym(q, {theta}));
      opt.theta_star = theta;
      opt.lambda_min = v;
      opt.violation = v < 0.0;
      opt.effective_violation =
          q.beta_c != 0 ? v / static_cast<double>(q.beta_c) : 0.0;
    } else {
      opt = expectation_mode ? symbell::optimize_theta_dicke_expectation(q)
                             : symbell::optimize_theta(q);
    }
    // Report family-normalized numbers for the scaled odd-n storage.
    opt.lambda_min /= static_cast<double>(scale);
    return opt;
  };

  json params{{"n", n}, {"figure", figure.empty() ? "none" : figure},
              {"operator", force_operator}};
  if (family_mode) params["family"] = "dicke";
  else if (use_ineq6) params["ineq6"] = true;
  else
    params.update(json{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma},
                       {"delta", delta}, {"epsilon", epsilon}});
  if (theta_given) params["theta"] = theta;
  if (!figure.empty()) params.update(json{{"n_min", n_min}, {"n_step", n_step}});

  if (figure == "fig1") {  // effective violation vs n
    std::string payload = "n,theta_star,lambda_min,effective_violation\n";
    for (i64 parties = n_min; parties <= n; parties += n_step) {
      const auto [q, scale] = build(parties);
      const symbell::ThetaOptimum opt = optimum(q, scale);
      const double beta_c_norm =
          static_cast<double>(q.beta_c) / static_cast<double>(scale);
      payload += std::to_string(parties) + ',' + format_double(opt.theta_star) +
                 ',' + format_double(opt.lambda_min) + ',' +
                 format_double(opt.lambda_min / beta_c_norm) + '\n';
    }
    emit(g, "violate", std::move(params), payload);
    return;
  }
  if (figure == "fig2") {  // effective violation vs theta at fixed n
    const auto [q, scale] = build(n);
    const double beta_c_norm =
        static_cast<double>(q.beta_c) / static_cast<double>(scale);
    std::string payload = "theta,lambda_min,effective_violation\n";
    constexpr int kPoints = 257;
    for (int i = 0; i < kPoints; ++i) {
      const double t = 3.14159265358979323846 * i / (kPoints - 1);
      const double v =
          (expectation_mode
               ? symbell::dicke_expectation(q, {t}, (q.n + 1) / 2)
               : symbell::min_eigenvalue(symbell::bell_operator_sym(q, {t}))) /
          static_cast<double>(scale);
      payload += format_double(t) + ',' + format_double(v) + ',' +
                 format_double(v / beta_c_norm) + '\n';
    }
    emit(g, "violate", std::move(params), payload);
    return;
  }

  const auto [q, scale] = build(n);
  const symbell::ThetaOptimum opt = optimum(q, scale);
  const double beta_c_norm =
      static_cast<double>(q.beta_c) / static_cast<double>(scale);
  json j;
  j["schema"] = symbell::kSchema;
  j["command"] = "violate";
  j["n"] = symbell::json_int(n);
  if (family_mode) j["family"] = "dicke";
  j["ineq"] = ineq_report(q);
  if (scale != 1) j["scale"] = symbell::json_int(scale);
  j["minimized"] = expectation_mode ? "dicke_expectation" : "operator_minimum";
  j["theta_star"] = opt.theta_star;
  j["lambda_min"] = opt.lambda_min;
  j["beta_c"] = beta_c_norm;
  j["effective_violation"] = opt.lambda_min / beta_c_norm;
  j["violation"] = opt.lambda_min < 0.0;
  j["status"] =
      opt.lambda_min < 0.0 ? "violation" : "no violation at these settings";
  emit(g, "violate", std::move(params), j.dump(2) + "\n");
}

// ------------------------------------------------------------------- dicke
void run_dicke(const GlobalOpts& g, i64 n) {
  const symbell::DickeFamily fam = symbell::dicke_family(n);
  const symbell::DickeViolation viol = symbell::dicke_violation_analytic(n);
  json j;
  j["schema"] = symbell::kSchema;
  j["command"] = "dicke";
  j["n"] = symbell::json_int(n);
  j["ineq"] = ineq_report(fam.ineq);
  j["scale"] = symbell::json_int(fam.scale);
  j["beta_c_family"] = symbell::json_int(fam.beta_c_family);
  j["theta_min"] = viol.theta_min;
  j["value"] = viol.value;
  j["effective_violation"] = viol.effective;
  json sats = json::array();
  for (const auto& t : symbell::dicke_saturating_counts(n))
    sats.push_back(symbell::to_json(t));
  j["saturating_counts"] = std::move(sats);
  emit(g, "dicke", json{{"n", n}}, j.dump(2) + "\n");
}

// --------------------------------------------------------------------- lmg
void run_lmg(const GlobalOpts& g, i64 n, double lambda, double h, bool full) {
  const symbell::LMGParams params{lambda, h, n};
  const symbell::LMGGroundState gs = symbell::lmg_ground_state(params);
  json j;
  j["schema"] = symbell::kSchema;
  j["command"] = "lmg";
  j["n"] = symbell::json_int(n);
  j["lambda"] = lambda;
  j["h"] = h;
  j["energy"] = gs.energy;
  j["degeneracy"] = gs.degeneracy;
  json ks = json::array();
  for (i64 k : gs.ks) ks.push_back(symbell::json_int(k));
  j["ks"] = std::move(ks);
  // k counts field-aligned spins: k = n is fully polarized along +z.
  j["dominant_k"] = symbell::json_int(gs.ks.front());
  j["fidelity"] = 1.0;  // the sector state is exactly |D^{dominant_k}>
  j["weak_field"] = gs.weak_field;
  if (full) {
    const symbell::LMGFullResult fr = symbell::lmg_ground_state_full(params);
    j["full"] = json{{"energy", fr.energy},
                     {"degeneracy", fr.degeneracy},
                     {"fidelity_with_sector_ground", fr.fidelity_with_sector_ground}};
  }
  emit(g, "lmg",
       json{{"n", n}, {"lambda", lambda}, {"h", h}, {"full", full}},
       j.dump(2) + "\n");
}

// ------------------------------------------------------------------ reduce
void run_reduce(const GlobalOpts& g, i64 n, i64 k_flag, const std::string& family,
                double theta, bool with_op) {
  const i64 k = k_flag >= 0 ? k_flag : (n + 1) / 2;
  const Eigen::Matrix4d rho = symbell::dicke_reduced_two_qubit(n, k);

  // Collective moments of |D_n^k>: <S_z^2> = (n/2 - k)^2, <{S_z,S_x}> = 0.
  const double dz = 0.5 * static_cast<double>(n) - static_cast<double>(k);
  const symbell::PairwiseCorrelators pw =
      symbell::collective_to_pairwise(dz * dz, 0.0, n);

  json j;
  j["schema"] = symbell::kSchema;
  j["command"] = "reduce";
  j["n"] = symbell::json_int(n);
  j["k"] = symbell::json_int(k);
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(rho(r, c));
    rows.push_back(std::move(row));
  }
  j["rho"] = std::move(rows);
  j["pairwise"] =
      json{{"czz", pw.czz}, {"czx", pw.czx}, {"in_range", pw.in_range}};

  if (with_op) {
    if (family != "dicke")
      throw symbell::precondition_error("unknown family '" + family + "'");
    const symbell::BellInequality q = symbell::dicke_family(n).ineq;
    const Eigen::Matrix4d op = symbell::reduced_bell_operator(q, {theta});
    double trace = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) trace += rho(r, c) * op(c, r);
    const double direct = symbell::dicke_expectation(q, {theta}, k);
    json oprows = json::array();
    for (int r = 0; r < 4; ++r) {
      json row = json::array();
      for (int c = 0; c < 4; ++c) row.push_back(op(r, c));
      oprows.push_back(std::move(row));
    }
    j["reduced_operator"] = std::move(oprows);
    j["theta"] = theta;
    j["trace_expectation"] = trace;
    j["subspace_expectation"] = direct;
    const double tol =
        1e-9 * (std::abs(direct) + static_cast<double>(n) * n + 1.0);
    if (std::abs(trace - direct) > tol)
      throw symbell::internal_error(
          "reduced-operator trace disagrees with the subspace expectation");
    j["agrees"] = true;
  }
  emit(g, "reduce",
       json{{"n", n}, {"k", k}, {"family", family}, {"theta", theta},
            {"operator", with_op}},
       j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbell: symmetric two-body Bell inequalities - exact polytope "
               "geometry, classical bounds, and quantum violation analysis"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write payload to PATH (manifest to PATH.manifest.json)");
  app.add_option("--threads", g.threads, "OpenMP thread count (0 = runtime default)");
  app.add_option("--seed", g.seed, "Reserved; v1 has no randomized algorithms");

  // vertices
  i64 v_n = 0;
  auto* cmd_v = app.add_subcommand("vertices", "Enumerate polytope vertices phi(dT_n)");
  cmd_v->add_option("--n", v_n, "Number of parties")->required()->check(CLI::Range(i64{2}, i64{1000000000}));

  // facets
  i64 f_n = 0;
  auto* cmd_f = app.add_subcommand("facets", "Enumerate all facets (exact hull)");
  cmd_f->add_option("--n", f_n, "Number of parties")->required()->check(CLI::Range(i64{2}, i64{1000000000}));

  // bound
  i64 b_n = 0, b_alpha = 0, b_beta = 0, b_gamma = 0, b_delta = 0, b_eps = 0;
  std::string b_family;
  bool b_brute = false;
  auto* cmd_b = app.add_subcommand("bound", "Exact classical bound beta_c and minimizers");
  cmd_b->add_option("--n", b_n, "Number of parties")->required()->check(CLI::Range(i64{1}, i64{1000000000}));
  auto* b_fam_opt = cmd_b->add_option("--family", b_family, "Built-in family")
                        ->check(CLI::IsMember({"dicke"}));
  cmd_b->add_option("--alpha", b_alpha, "alpha")->excludes(b_fam_opt);
  cmd_b->add_option("--beta", b_beta, "beta")->excludes(b_fam_opt);
  cmd_b->add_option("--gamma", b_gamma, "gamma")->excludes(b_fam_opt);
  cmd_b->add_option("--delta", b_delta, "delta")->excludes(b_fam_opt);
  cmd_b->add_option("--epsilon", b_eps, "epsilon")->excludes(b_fam_opt);
  cmd_b->add_flag("--bruteforce", b_brute, "Cross-check with the 4^n scan (n <= 14)");

  // classbuild
  i64 c_n = 0, c_x = 1, c_y = 1, c_mu = 0;
  int c_sigma = 1, c_branch = 1;
  bool c_tight = false;
  auto* cmd_c = app.add_subcommand("classbuild", "Build a class-B family inequality");
  cmd_c->add_option("--n", c_n, "Number of parties")->required()->check(CLI::Range(i64{2}, i64{1000000000}));
  cmd_c->add_option("--x", c_x, "x >= 1")->required();
  cmd_c->add_option("--y", c_y, "y >= 1")->required();
  cmd_c->add_option("--sigma", c_sigma, "+1 or -1")->required()->check(CLI::IsMember({-1, 1}));
  cmd_c->add_option("--mu", c_mu, "mu")->required();
  cmd_c->add_option("--branch", c_branch, "+1 (alpha_+) or -1 (alpha_-)")
      ->required()
      ->check(CLI::IsMember({-1, 1}));
  cmd_c->add_flag("--check-tight", c_tight, "Also run the exact tightness test");

  // violate
  i64 w_n = 0, w_alpha = 0, w_beta = 0, w_gamma = 0, w_delta = 0, w_eps = 0;
  i64 w_nmin = 2, w_nstep = 1;
  std::string w_family, w_figure;
  bool w_ineq6 = false, w_operator = false;
  double w_theta = 0.0;
  auto* cmd_w = app.add_subcommand("violate", "Quantum violation search over theta");
  cmd_w->add_option("--n", w_n, "Number of parties")->required()->check(CLI::Range(i64{2}, i64{1000000000}));
  auto* w_fam_opt = cmd_w->add_option("--family", w_family, "Built-in family")
                        ->check(CLI::IsMember({"dicke"}));
  auto* w_i6_opt = cmd_w->add_flag("--ineq6", w_ineq6,
                                   "Use the inequality -2S0+S00/2-S01+S11/2 >= -2n");
  w_i6_opt->excludes(w_fam_opt);
  cmd_w->add_option("--alpha", w_alpha, "alpha")->excludes(w_fam_opt)->excludes(w_i6_opt);
  cmd_w->add_option("--beta", w_beta, "beta")->excludes(w_fam_opt)->excludes(w_i6_opt);
  cmd_w->add_option("--gamma", w_gamma, "gamma")->excludes(w_fam_opt)->excludes(w_i6_opt);
  cmd_w->add_option("--delta", w_delta, "delta")->excludes(w_fam_opt)->excludes(w_i6_opt);
  cmd_w->add_option("--epsilon", w_eps, "epsilon")->excludes(w_fam_opt)->excludes(w_i6_opt);
  auto* w_theta_opt = cmd_w->add_option("--theta", w_theta, "Fixed angle instead of optimizing");
  cmd_w->add_option("--figure", w_figure, "Sweep emission: fig1 (vs n) or fig2 (vs theta)")
      ->check(CLI::IsMember({"fig1", "fig2"}));
  cmd_w->add_flag("--operator", w_operator,
                  "Minimize the operator spectrum even in family mode");
  cmd_w->add_option("--n-min", w_nmin, "Sweep start for fig1")->check(CLI::Range(i64{2}, i64{1000000000}));
  cmd_w->add_option("--n-step", w_nstep, "Sweep step for fig1")->check(CLI::Range(i64{1}, i64{1000000000}));

  // dicke
  i64 d_n = 0;
  auto* cmd_d = app.add_subcommand("dicke", "Dicke-family inequality and analytic violation");
  cmd_d->add_option("--n", d_n, "Number of parties")->required()->check(CLI::Range(i64{2}, i64{1000000000}));

  // lmg
  i64 l_n = 0;
  double l_lambda = 1.0, l_h = 0.0;
  bool l_full = false;
  auto* cmd_l = app.add_subcommand("lmg", "LMG symmetric-sector ground state");
  cmd_l->set_help_flag("--help", "Print help");  // frees -h/--h for the field
  cmd_l->add_option("--n", l_n, "Number of spins")->required()->check(CLI::Range(i64{2}, i64{1000000000}));
  cmd_l->add_option("--lambda", l_lambda, "Coupling > 0")->capture_default_str();
  cmd_l->add_option("--h", l_h, "Field >= 0")->capture_default_str();
  cmd_l->add_flag("--full", l_full, "Cross-check against full 2^n diagonalization (n <= 12)");

  // reduce
  i64 r_n = 0, r_k = -1;
  double r_theta = 0.0;
  bool r_op = false;
  std::string r_family = "dicke";
  auto* cmd_r = app.add_subcommand("reduce", "Two-qubit reduced state and operator");
  cmd_r->add_option("--n", r_n, "Number of parties")->required()->check(CLI::Range(i64{2}, i64{1000000000}));
  cmd_r->add_option("--k", r_k, "Dicke index (default ceil(n/2))");
  cmd_r->add_option("--theta", r_theta, "Measurement angle for the reduced operator")
      ->capture_default_str();
  cmd_r->add_flag("--operator", r_op, "Include the reduced Bell operator and trace check");
  cmd_r->add_option("--family", r_family, "Inequality family for --operator")
      ->check(CLI::IsMember({"dicke"}))
      ->capture_default_str();

  // Let global flags (--format, --out, ...) appear after the subcommand.
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

#ifdef _OPENMP
  if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

  try {
    if (cmd_v->parsed()) run_vertices(g, v_n);
    else if (cmd_f->parsed()) run_facets(g, f_n);
    else if (cmd_b->parsed())
      run_bound(g, b_n, b_family, b_alpha, b_beta, b_gamma, b_delta, b_eps, b_brute);
    else if (cmd_c->parsed())
      run_classbuild(g, c_n, c_x, c_y, c_sigma, c_mu, c_branch, c_tight);
    else if (cmd_w->parsed())
      run_violate(g, w_n, w_family, w_ineq6, w_alpha, w_beta, w_gamma, w_delta,
                  w_eps, w_theta, w_theta_opt->count() > 0, w_figure, w_operator,
                  w_nmin, w_nstep);
    else if (cmd_d->parsed()) run_dicke(g, d_n);
    else if (cmd_l->parsed()) run_lmg(g, l_n, l_lambda, l_h, l_full);
    else if (cmd_r->parsed()) run_reduce(g, r_n, r_k, r_family, r_theta, r_op);
  } catch (const symbell::precondition_error& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 2;
  } catch (const symbell::internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
