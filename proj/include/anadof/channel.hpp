#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "anadof/types.hpp"

namespace anadof {

/// splitmix64 step; the stream underlying every generator here.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stateless substream derivation: equal (seed, tag) pairs give equal
/// substreams, distinct tags give independent-looking ones.
Seed derive_seed(Seed seed, std::uint64_t tag);

/// Domain tags so slot, symbol, trial and source substreams never collide.
namespace seed_domain {
inline constexpr std::uint64_t kSlot = 1;
inline constexpr std::uint64_t kSymbol = 2;
inline constexpr std::uint64_t kTrial = 3;
inline constexpr std::uint64_t kSource = 4;
}  // namespace seed_domain

/**
 * Deterministic CN(0,1) generator: splitmix64 uniforms fed through the polar
 * Box-Muller map. Platform-independent by construction, unlike
 * std::normal_distribution.
 */
class GaussianStream {
public:
  explicit GaussianStream(Seed seed) : state_(seed.value) {}

  /// Uniform on [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(splitmix64_next(state_) >> 11) * 0x1.0p-53; }

  /// Circularly-symmetric complex Gaussian, unit total variance.
  std::complex<double> next_cgauss();

  /// Real N(0,1).
  double next_gauss();

private:
  std::uint64_t state_;
};

/// Fading realization over n time slots: per-slot channel matrices
/// H_t (na x m) toward receiver A and G_t (nb x m) toward receiver B.
struct ChannelRealization {
  AntennaConfig cfg;
  std::vector<Eigen::MatrixXcd> h;
  std::vector<Eigen::MatrixXcd> g;

  std::size_t slots() const { return h.size(); }
};

/**
 * Draws n i.i.d. slots of CN(0,1) entries. Slot t depends only on (seed, t),
 * so extending n keeps earlier slots unchanged and slots can be generated in
 * any order.
 */
ChannelRealization sample_states(const AntennaConfig& cfg, std::size_t n, Seed seed);

/// Stacked state matrix S_t = [H_t; G_t] of slot t (0-based).
Eigen::MatrixXcd state_matrix(const ChannelRealization& real, std::size_t t);

/// True when the numeric rank at the given relative tolerance equals
/// min(rows, cols).
bool check_full_rank(const Eigen::MatrixXcd& mat, double tol = 1e-10);

/**
 * Block-diagonal phase channels over slots [begin, begin+count): returns
 * (H~, G~) with H~ = blkdiag(H_begin, ..., H_{begin+count-1}) of size
 * (na*count) x (m*count), and likewise G~.
 */
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> block_diag_channels(const ChannelRealization& real,
                                                                  std::size_t begin,
                                                                  std::size_t count);

/// JSON image of a realization: slot-major, row-major [re, im] entry pairs.
nlohmann::json dump_realization(const ChannelRealization& real);

/// Inverse of dump_realization; throws on malformed input.
ChannelRealization load_realization(const nlohmann::json& j);

}  // namespace anadof
