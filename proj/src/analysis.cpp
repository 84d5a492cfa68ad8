#include "anadof/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anadof/sdof.hpp"

namespace anadof {
namespace {

bool is_bcc(SchemeKind kind) {
  return kind == SchemeKind::BccFourPhase || kind == SchemeKind::MisoFourSlot;
}

// Concatenation of the symbol blocks of T listed in `blocks` (0 = noise,
// then confidential messages).
Eigen::MatrixXcd select_blocks(const SchemeMatrices& s, const Eigen::MatrixXcd& t,
                               const std::vector<int>& blocks) {
  Eigen::Index cols = 0;
  for (int b : blocks) cols += s.symbol_block(b).second;
  Eigen::MatrixXcd sub(t.rows(), cols);
  Eigen::Index at = 0;
  for (int b : blocks) {
    const auto [begin, len] = s.symbol_block(b);
    sub.middleCols(at, len) = t.middleCols(begin, len);
    at += len;
  }
  return sub;
}

double observation_entropy_slopeable(const SchemeMatrices& s, const Eigen::MatrixXcd& t,
                                     const std::vector<int>& blocks, double power) {
  // h-style term: log2 det(I + P' T_sub T_sub^H); differences of these give
  // the Gaussian mutual informations, the additive constants cancel.
  return logdet2_eye_plus_scaled_gram(select_blocks(s, t, blocks), power * s.power_scale);
}

void require_message(const SchemeMatrices& s, Receiver which, const char* op) {
  if (which == Receiver::B && !is_bcc(s.kind))
    throw std::invalid_argument(std::string(op) + ": wiretap schemes carry only message A");
}

Eigen::MatrixXcd vstack(const Eigen::MatrixXcd& top, const Eigen::MatrixXcd& bottom) {
  if (top.cols() != bottom.cols()) throw std::logic_error("vstack: column mismatch");
  Eigen::MatrixXcd out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

void add_check(RankReport& report, std::string name, Eigen::Index expected,
               const Eigen::MatrixXcd& mat) {
  RankCheck check;
  check.name = std::move(name);
  check.expected = expected;
  check.observed = numeric_rank(mat, report.tol);
  check.pass = check.observed == check.expected;
  report.checks.push_back(std::move(check));
}

MessageEstimate estimate_message(const std::vector<double>& sdof, const std::vector<double>& leak,
                                 Rational theory, double tol) {
  MessageEstimate est;
  est.sdof_per_trial = sdof;
  est.leakage_per_trial = leak;
  est.theory = theory;
  const double n = static_cast<double>(sdof.size());
  for (double v : sdof) est.sdof_mean += v;
  est.sdof_mean /= n;
  for (double v : leak) est.leakage_mean += v;
  est.leakage_mean /= n;
  double var = 0.0;
  for (double v : sdof) var += (v - est.sdof_mean) * (v - est.sdof_mean);
  est.sdof_stddev = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  est.ci95 = 1.96 * est.sdof_stddev / std::sqrt(n);
  est.pass = std::abs(est.sdof_mean - theory.to_double()) <= tol &&
             std::abs(est.leakage_mean) <= tol;
  return est;
}

nlohmann::json slopes_json(const MessageEstimate& est) {
  return {{"sdof_mean", est.sdof_mean},
          {"sdof_stddev", est.sdof_stddev},
          {"ci95", est.ci95},
          {"sdof_per_trial", est.sdof_per_trial},
          {"pass", est.pass}};
}

nlohmann::json leakage_json(const MessageEstimate& est) {
  return {{"mean", est.leakage_mean}, {"per_trial", est.leakage_per_trial}};
}

}  // namespace

double mutual_info_legit(const SchemeMatrices& scheme, double power, Receiver rx) {
  require_message(scheme, rx, "mutual_info_legit");
  if (power <= 0.0) throw std::invalid_argument("mutual_info_legit: power must be positive");
  if (rx == Receiver::A) {
    // I(vA; Y) = h(Y) - h(Y | vA)
    const std::vector<int> all =
        is_bcc(scheme.kind) ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 1};
    const std::vector<int> cond =
        is_bcc(scheme.kind) ? std::vector<int>{0, 2} : std::vector<int>{0};
    return observation_entropy_slopeable(scheme, scheme.t_y, all, power) -
           observation_entropy_slopeable(scheme, scheme.t_y, cond, power);
  }
  // I(vB; Z) = h(Z) - h(Z | vB)
  return observation_entropy_slopeable(scheme, scheme.t_z, {0, 1, 2}, power) -
         observation_entropy_slopeable(scheme, scheme.t_z, {0, 1}, power);
}

double leakage_eaves(const SchemeMatrices& scheme, double power, Receiver msg) {
  require_message(scheme, msg, "leakage_eaves");
  if (power <= 0.0) throw std::invalid_argument("leakage_eaves: power must be positive");
  if (!is_bcc(scheme.kind)) {
    // I(v; Z) = h(Z) - h(Z | v)
    return observation_entropy_slopeable(scheme, scheme.t_z, {0, 1}, power) -
           observation_entropy_slopeable(scheme, scheme.t_z, {0}, power);
  }
  if (msg == Receiver::A) {
    // I(vA; Z | vB) = h(Z | vB) - h(Z | vA, vB)
    return observation_entropy_slopeable(scheme, scheme.t_z, {0, 1}, power) -
           observation_entropy_slopeable(scheme, scheme.t_z, {0}, power);
  }
  // I(vB; Y | vA) = h(Y | vA) - h(Y | vA, vB)
  return observation_entropy_slopeable(scheme, scheme.t_y, {0, 2}, power) -
         observation_entropy_slopeable(scheme, scheme.t_y, {0}, power);
}

MiCurve mutual_info_curve(const SchemeMatrices& scheme, const std::vector<double>& grid_db,
                          Receiver rx) {
  MiCurve curve;
  curve.snr_db = grid_db;
  for (double db : grid_db) curve.bits.push_back(mutual_info_legit(scheme, db_to_power(db), rx));
  return curve;
}

MiCurve leakage_curve(const SchemeMatrices& scheme, const std::vector<double>& grid_db,
                      Receiver msg) {
  MiCurve curve;
  curve.snr_db = grid_db;
  for (double db : grid_db) curve.bits.push_back(leakage_eaves(scheme, db_to_power(db), msg));
  return curve;
}

SlopeEstimate slope_estimate(const MiCurve& curve) {
  std::vector<double> x;
  x.reserve(curve.snr_db.size());
  for (double db : curve.snr_db) x.push_back(std::log2(db_to_power(db)));
  return fit_line(x, curve.bits);
}

SlopeEstimate rank_lemma_check(const Eigen::MatrixXcd& a, const std::vector<double>& grid_db) {
  if (grid_db.size() < 2) throw std::invalid_argument("rank_lemma_check: need >= 2 grid points");
  const auto [lo, hi] = std::minmax_element(grid_db.begin(), grid_db.end());
  if (*hi - *lo < 40.0) throw std::invalid_argument("rank_lemma_check: grid must span >= 40 dB");
  std::vector<double> x, y;
  for (double db : grid_db) {
    x.push_back(std::log2(db_to_power(db)));
    y.push_back(logdet2_eye_plus_scaled_gram(a, db_to_power(db)));
  }
  return fit_line(x, y);
}

RankReport verify_ranks(const SchemeMatrices& s, double tol) {
  RankReport report;
  report.kind = s.kind;
  report.cfg = s.cfg;
  report.tol = tol;

  const int m = s.cfg.m, na = s.cfg.na, nb = s.cfg.nb;
  const auto& tau = s.plan.tau;
  const Precoders& p = s.precoders;

  switch (s.kind) {
    case SchemeKind::WiretapThreePhase:
      add_check(report, "he_invertible", s.he.rows(), s.he);
      add_check(report, "legit_alignment", static_cast<Eigen::Index>(m) * tau[1],
                vstack(s.h_phase[1], s.h_phase[2] * p.phi * s.g_phase[1]));
      add_check(report, "noise_fill", static_cast<Eigen::Index>(m) * tau[0],
                vstack(s.g_phase[0], s.g_phase[1] * p.theta * s.h_phase[0]));
      break;
    case SchemeKind::WiretapPartialTwoPhase: {
      const Eigen::MatrixXcd embed =
          s.x_map.block(static_cast<Eigen::Index>(m) * tau[0], s.noise_dim,
                        static_cast<Eigen::Index>(m) * tau[1], s.conf_dims[0]);
      add_check(report, "legit_decode", static_cast<Eigen::Index>(na) * tau[1],
                s.h_phase[1] * embed);
      add_check(report, "noise_fill", static_cast<Eigen::Index>(m) * tau[0],
                vstack(s.g_phase[0], s.g_phase[1] * p.theta * s.h_phase[0]));
      break;
    }
    case SchemeKind::BccFourPhase:
    case SchemeKind::MisoFourSlot:
      add_check(report, "he_invertible", s.he.rows(), s.he);
      add_check(report, "ge_invertible", s.ge.rows(), s.ge);
      add_check(report, "legit_alignment_a", static_cast<Eigen::Index>(m) * tau[1],
                vstack(s.h_phase[1], s.h_phase[3] * p.phi * s.g_phase[1]));
      add_check(report, "legit_alignment_b", static_cast<Eigen::Index>(m) * tau[2],
                vstack(s.g_phase[2], s.g_phase[3] * p.phi_b * s.h_phase[2]));
      add_check(report, "noise_fill_a", static_cast<Eigen::Index>(m) * tau[0],
                vstack(s.g_phase[0], s.g_phase[1] * p.theta * s.h_phase[0]));
      add_check(report, "noise_fill_b", static_cast<Eigen::Index>(m) * tau[0],
                vstack(s.h_phase[0], s.h_phase[2] * p.theta_b * s.g_phase[0]));
      break;
  }

  report.pass = true;
  for (const auto& check : report.checks) report.pass = report.pass && check.pass;
  return report;
}

nlohmann::json to_json(const RankReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"pass", c.pass}});
  return {{"kind", to_string(report.kind)},
          {"cfg", {{"m", report.cfg.m}, {"na", report.cfg.na}, {"nb", report.cfg.nb}}},
          {"tol", report.tol},
          {"checks", checks},
          {"pass", report.pass}};
}

SdofVerification monte_carlo_sdof(SchemeKind kind, const AntennaConfig& cfg, int trials,
                                  const std::vector<double>& grid_db, Seed seed, double tol) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_sdof: need >= 1 trial");
  if (grid_db.size() < 2) throw std::invalid_argument("monte_carlo_sdof: need >= 2 grid points");

  SdofVerification out;
  out.kind = kind;
  out.cfg = cfg;
  out.grid_db = grid_db;
  out.trials = trials;
  out.seed = seed;
  out.tol = tol;

  const PhasePlan plan = phase_plan(kind, cfg);
  const bool bcc = is_bcc(kind);
  const double total = static_cast<double>(plan.total);

  std::vector<double> sdof_a, leak_a, sdof_b, leak_b;
  const Seed trial_base = derive_seed(seed, seed_domain::kTrial);
  for (int i = 0; i < trials; ++i) {
    const ChannelRealization real = sample_states(
        plan.cfg, static_cast<std::size_t>(plan.total), derive_seed(trial_base, i));
    const SchemeMatrices scheme = build_scheme(kind, cfg, real);
    sdof_a.push_back(slope_estimate(mutual_info_curve(scheme, grid_db, Receiver::A)).slope / total);
    leak_a.push_back(slope_estimate(leakage_curve(scheme, grid_db, Receiver::A)).slope / total);
    if (bcc) {
      sdof_b.push_back(slope_estimate(mutual_info_curve(scheme, grid_db, Receiver::B)).slope /
                       total);
      leak_b.push_back(slope_estimate(leakage_curve(scheme, grid_db, Receiver::B)).slope / total);
    }
  }

  Rational theory_a, theory_b;
  switch (kind) {
    case SchemeKind::WiretapThreePhase: theory_a = sdof_wiretap_delayed(cfg); break;
    case SchemeKind::WiretapPartialTwoPhase: theory_a = sdof_wiretap_partial(cfg); break;
    case SchemeKind::BccFourPhase:
    case SchemeKind::MisoFourSlot: {
      const auto point = bcc_sum_point(cfg);
      theory_a = point.first;
      theory_b = point.second;
      break;
    }
  }

  out.a = estimate_message(sdof_a, leak_a, theory_a, tol);
  out.pass = out.a.pass;
  if (bcc) {
    out.b = estimate_message(sdof_b, leak_b, theory_b, tol);
    out.pass = out.pass && out.b->pass;
  }
  return out;
}

nlohmann::json to_json(const SdofVerification& v) {
  nlohmann::json slopes = {{"A", slopes_json(v.a)}};
  nlohmann::json leakage = {{"A", leakage_json(v.a)}};
  nlohmann::json theory = {{"A", {v.a.theory.num(), v.a.theory.den()}}};
  if (v.b) {
    slopes["B"] = slopes_json(*v.b);
    leakage["B"] = leakage_json(*v.b);
    theory["B"] = {v.b->theory.num(), v.b->theory.den()};
  }
  return {{"kind", to_string(v.kind)},
          {"cfg", {{"m", v.cfg.m}, {"na", v.cfg.na}, {"nb", v.cfg.nb}}},
          {"grid_dB", v.grid_db},
          {"trials", v.trials},
          {"seed", v.seed.value},
          {"tol", v.tol},
          {"slopes", slopes},
          {"leakage", leakage},
          {"theory_value", theory},
          {"pass", v.pass}};
}

}  // namespace anadof
