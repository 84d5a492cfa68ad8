#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anadof/linalg.hpp"
#include "anadof/rational.hpp"
#include "anadof/schemes.hpp"

namespace anadof {

/// Transmit powers (dB) used for pre-log slope estimation.
inline std::vector<double> default_snr_grid() { return {40.0, 60.0, 80.0, 100.0}; }

/// Selects a receiver/message of a scheme: A is the (first) legitimate user,
/// B the second BCC user. Wiretap kinds only carry message A.
enum class Receiver { A, B };

/**
 * I(message; own receiver's observation) in bits at total power P, computed
 * from Gaussian log-determinants of the noiseless symbol maps plus unit
 * noise. Receiver B is only defined for the BCC kinds.
 */
double mutual_info_legit(const SchemeMatrices& scheme, double power, Receiver rx = Receiver::A);

/**
 * Information leaked about a message to the other receiver, in bits:
 * I(v; Z) for the wiretap kinds, I(vA; Z | vB) or I(vB; Y | vA) for the
 * BCC kinds.
 */
double leakage_eaves(const SchemeMatrices& scheme, double power, Receiver msg = Receiver::A);

/// Mutual information against log2(P) over the grid.
struct MiCurve {
  std::vector<double> snr_db;
  std::vector<double> bits;
};

MiCurve mutual_info_curve(const SchemeMatrices& scheme, const std::vector<double>& grid_db,
                          Receiver rx = Receiver::A);
MiCurve leakage_curve(const SchemeMatrices& scheme, const std::vector<double>& grid_db,
                      Receiver msg = Receiver::A);

/// OLS pre-log slope of a curve in bits per log2(P).
SlopeEstimate slope_estimate(const MiCurve& curve);

/**
 * Numerical counterpart of the rank lemma: the slope of
 * log2 det(I + P A A^H) against log2 P over the grid approaches rank(A).
 * Requires at least two grid points spanning >= 40 dB.
 */
SlopeEstimate rank_lemma_check(const Eigen::MatrixXcd& a, const std::vector<double>& grid_db);

/// One named rank identity of a scheme instance.
struct RankCheck {
  std::string name;
  Eigen::Index expected = 0;
  Eigen::Index observed = 0;
  bool pass = false;
};

struct RankReport {
  SchemeKind kind{};
  AntennaConfig cfg;
  double tol = 1e-8;
  std::vector<RankCheck> checks;
  bool pass = false;
};

/// Checks the alignment and noise-filling rank identities (and square-form
/// invertibility where applicable) of a built scheme.
RankReport verify_ranks(const SchemeMatrices& scheme, double tol = 1e-8);

nlohmann::json to_json(const RankReport& report);

/// Monte-Carlo SDoF estimate of one message.
struct MessageEstimate {
  double sdof_mean = 0.0;
  double sdof_stddev = 0.0;
  double ci95 = 0.0;
  double leakage_mean = 0.0;  // per-slot leakage slope
  Rational theory;
  bool pass = false;
  std::vector<double> sdof_per_trial;
  std::vector<double> leakage_per_trial;
};

struct SdofVerification {
  SchemeKind kind{};
  AntennaConfig cfg;
  std::vector<double> grid_db;
  int trials = 0;
  Seed seed;
  double tol = 0.05;
  MessageEstimate a;
  std::optional<MessageEstimate> b;
  bool pass = false;
};

/**
 * Estimates per-slot secrecy DoF over `trials` independent realizations:
 * mutual-information slope divided by the slot count, compared against the
 * closed-form value; message leakage slopes must vanish. `tol` bounds both
 * |estimate - theory| and |leakage| per slot.
 */
SdofVerification monte_carlo_sdof(SchemeKind kind, const AntennaConfig& cfg, int trials,
                                  const std::vector<double>& grid_db, Seed seed, double tol = 0.05);

nlohmann::json to_json(const SdofVerification& verification);

}  // namespace anadof
