#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include <json.hpp>

#include "anadof/channel.hpp"
#include "anadof/types.hpp"

namespace anadof {

/// Artificial-noise-alignment transmission schemes.
enum class SchemeKind {
  WiretapThreePhase,      // delayed CSIT wiretap, phases: noise / confidential / retransmit
  WiretapPartialTwoPhase, // delayed CSIT on the legitimate link only
  BccFourPhase,           // two confidential messages, four phases
  MisoFourSlot            // hard-coded (m, na, nb) = (2, 1, 1) four-slot instance
};

std::string to_string(SchemeKind kind);
SchemeKind scheme_kind_from_string(const std::string& name);

/**
 * Slot budget per phase. Configurations with m > na+nb transmit on the first
 * na+nb antennas only, so the plan is built from cfg.capped(); `cfg` below is
 * that capped configuration and `requested_m` keeps the original count.
 */
struct PhasePlan {
  SchemeKind kind{};
  AntennaConfig cfg;
  int requested_m = 0;
  std::vector<int> tau;
  int total = 0;
};

/// Slot plan of a scheme. Requires m > max{na, nb} (MisoFourSlot requires
/// exactly (2, 1, 1)); throws std::invalid_argument otherwise.
PhasePlan phase_plan(SchemeKind kind, const AntennaConfig& cfg);

/**
 * Retransmission precoders in their canonical permuted block-diagonal form.
 * Each precoder equals [blkdiag(per-slot unit embeddings) | 0] * Pi^T, where
 * the row permutation Pi is chosen so the selected rows of the corresponding
 * phase channel become block-diagonal. The permutations are stored as index
 * vectors: row j of Pi^T * X is row perm(j) of X.
 *
 * Wiretap kinds use theta (and phi for the three-phase scheme); the BCC kinds
 * use theta/phi for message A and theta_b/phi_b for message B.
 */
struct Precoders {
  SchemeKind kind{};
  Eigen::MatrixXcd theta, phi, theta_b, phi_b;
  Eigen::VectorXi perm_theta, perm_phi, perm_theta_b, perm_phi_b;
};

Precoders build_precoders(SchemeKind kind, const AntennaConfig& cfg, const PhasePlan& plan);

/// 0/1 matrix Pi with (Pi^T X)(j, :) = X(perm(j), :); Pi * Pi^T = I.
Eigen::MatrixXd perm_matrix(const Eigen::VectorXi& perm);

/**
 * Fully assembled scheme instance over a concrete channel realization.
 *
 * Symbol layout: sigma = [u; v] (wiretap kinds) or [u; vA; vB] (BCC kinds),
 * with u the artificial-noise block of size noise_dim and the confidential
 * blocks sized by conf_dims. All symbols are i.i.d. with common variance
 * P' = P * power_scale, which makes every slot obey E||x_t||^2 <= P.
 *
 *  - he, ge: effective square-form matrices acting on the scheme's
 *    intermediate vectors (rows ordered per y_phase_order / z_phase_order);
 *  - t_y, t_z: noiseless maps sigma -> receiver observations (same row order);
 *  - x_map: map sigma -> stacked transmit signal, slot-major.
 */
struct SchemeMatrices {
  SchemeKind kind{};
  AntennaConfig cfg;
  PhasePlan plan;
  Precoders precoders;
  std::vector<Eigen::MatrixXcd> h_phase, g_phase;
  Eigen::MatrixXcd he, ge;
  Eigen::MatrixXcd t_y, t_z;
  Eigen::MatrixXcd x_map;
  std::vector<int> y_phase_order, z_phase_order;
  int noise_dim = 0;
  std::vector<int> conf_dims;
  Eigen::VectorXd slot_gain;
  double power_scale = 1.0;

  int symbol_dim() const;
  /// Column range of symbol block b (0 = noise, 1 = first confidential, ...).
  std::pair<int, int> symbol_block(int b) const;
};

/**
 * Builds the scheme's block matrices on the given realization. The
 * realization must provide at least plan.total slots; its antenna counts must
 * match cfg.capped() except that extra transmit antennas are allowed and
 * silently truncated to the first na+nb columns.
 */
SchemeMatrices build_scheme(SchemeKind kind, const AntennaConfig& cfg,
                            const ChannelRealization& real);

/// Scheme assembled from externally supplied precoders (they must have the
/// canonical shapes; values may differ).
SchemeMatrices build_scheme(SchemeKind kind, const AntennaConfig& cfg,
                            const ChannelRealization& real, const Precoders& precoders);

/// One Monte-Carlo draw of the transmitted slots at total power budget P.
struct TransmitSignals {
  std::vector<Eigen::VectorXcd> x;  // per-slot transmit vectors
  Eigen::VectorXcd symbols;         // the drawn symbol vector sigma
  double symbol_power = 0.0;        // P' actually applied
};

TransmitSignals transmit_signals(const SchemeMatrices& scheme, double power, Seed seed);

/// Shapes and block-level sparsity masks of every scheme matrix, for
/// golden-structure tests and cross-implementation comparison.
nlohmann::json dump_scheme_shapes(const SchemeMatrices& scheme);

}  // namespace anadof
