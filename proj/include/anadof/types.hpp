#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace anadof {

/// Transmitter CSI knowledge for the formula dispatch.
enum class CsitMode { Perfect, Delayed, DelayedPartial, None };

/**
 * Antenna counts of the two-user broadcast channel: m at the transmitter,
 * na at receiver A, nb at receiver B (the eavesdropper in the wiretap
 * setting). All counts must be >= 1.
 */
struct AntennaConfig {
  int m = 1;
  int na = 1;
  int nb = 1;

  AntennaConfig() = default;
  AntennaConfig(int m_, int na_, int nb_) : m(m_), na(na_), nb(nb_) {
    if (m < 1 || na < 1 || nb < 1)
      throw std::invalid_argument("AntennaConfig: antenna counts must be >= 1");
  }

  int max_rx() const { return std::max(na, nb); }
  int min_rx() const { return std::min(na, nb); }

  /// Effective transmit antenna count: more than na+nb antennas never helps,
  /// so schemes and capped formulas use min(m, na+nb).
  int m_capped() const { return std::min(m, na + nb); }

  /// Same receivers, transmitter capped to na+nb antennas.
  AntennaConfig capped() const { return AntennaConfig(m_capped(), na, nb); }

  /// Receivers swapped; used for the B-user corner of the regions.
  AntennaConfig swapped() const { return AntennaConfig(m, nb, na); }

  friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;
};

/// Seed for the deterministic channel/symbol generators.
struct Seed {
  std::uint64_t value = 0;
  Seed() = default;
  explicit Seed(std::uint64_t v) : value(v) {}
  friend bool operator==(const Seed&, const Seed&) = default;
};

std::string to_string(CsitMode mode);
CsitMode csit_mode_from_string(const std::string& name);

}  // namespace anadof
