#include "anadof/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anadof/linalg.hpp"

namespace anadof {
namespace {

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& rows, Eigen::Index nr, Eigen::Index nc) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != nr)
    throw std::invalid_argument("realization JSON: bad row count");
  Eigen::MatrixXcd mat(nr, nc);
  for (Eigen::Index i = 0; i < nr; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != nc)
      throw std::invalid_argument("realization JSON: bad column count");
    for (Eigen::Index j = 0; j < nc; ++j) {
      const auto& e = row[j];
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("realization JSON: entries must be [re, im] pairs");
      mat(i, j) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
    }
  }
  return mat;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& mat) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < mat.cols(); ++j)
      row.push_back({mat(i, j).real(), mat(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Seed derive_seed(Seed seed, std::uint64_t tag) {
  const std::uint64_t folded = seed.value + 0x9e3779b97f4a7c15ULL * (tag + 1);
  return Seed{mix64(mix64(folded) + 0x632be59bd9b4e019ULL)};
}

std::complex<double> GaussianStream::next_cgauss() {
  const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
  const double u2 = next_unit();
  const double r = std::sqrt(-std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

double GaussianStream::next_gauss() {
  const double u1 = 1.0 - next_unit();
  const double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ChannelRealization sample_states(const AntennaConfig& cfg, std::size_t n, Seed seed) {
  ChannelRealization real;
  real.cfg = cfg;
  real.h.reserve(n);
  real.g.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    GaussianStream stream(derive_seed(derive_seed(seed, seed_domain::kSlot), t));
    Eigen::MatrixXcd h(cfg.na, cfg.m), g(cfg.nb, cfg.m);
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = stream.next_cgauss();
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = stream.next_cgauss();
    real.h.push_back(std::move(h));
    real.g.push_back(std::move(g));
  }
  return real;
}

Eigen::MatrixXcd state_matrix(const ChannelRealization& real, std::size_t t) {
  if (t >= real.slots()) throw std::out_of_range("state_matrix: slot index out of range");
  Eigen::MatrixXcd s(real.cfg.na + real.cfg.nb, real.cfg.m);
  s.topRows(real.cfg.na) = real.h[t];
  s.bottomRows(real.cfg.nb) = real.g[t];
  return s;
}

bool check_full_rank(const Eigen::MatrixXcd& mat, double tol) {
  return numeric_rank(mat, tol) == std::min(mat.rows(), mat.cols());
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> block_diag_channels(const ChannelRealization& real,
                                                                  std::size_t begin,
                                                                  std::size_t count) {
  if (begin + count > real.slots())
    throw std::out_of_range("block_diag_channels: slot range out of bounds");
  const Eigen::Index na = real.cfg.na, nb = real.cfg.nb, m = real.cfg.m;
  const Eigen::Index k = static_cast<Eigen::Index>(count);
  Eigen::MatrixXcd hh = Eigen::MatrixXcd::Zero(na * k, m * k);
  Eigen::MatrixXcd gg = Eigen::MatrixXcd::Zero(nb * k, m * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    hh.block(na * i, m * i, na, m) = real.h[begin + i];
    gg.block(nb * i, m * i, nb, m) = real.g[begin + i];
  }
  return {std::move(hh), std::move(gg)};
}

nlohmann::json dump_realization(const ChannelRealization& real) {
  nlohmann::json j;
  j["m"] = real.cfg.m;
  j["na"] = real.cfg.na;
  j["nb"] = real.cfg.nb;
  j["slots"] = nlohmann::json::array();
  for (std::size_t t = 0; t < real.slots(); ++t)
    j["slots"].push_back({{"H", matrix_to_json(real.h[t])}, {"G", matrix_to_json(real.g[t])}});
  return j;
}

ChannelRealization load_realization(const nlohmann::json& j) {
  ChannelRealization real;
  real.cfg = AntennaConfig(j.at("m").get<int>(), j.at("na").get<int>(), j.at("nb").get<int>());
  for (const auto& slot : j.at("slots")) {
    real.h.push_back(matrix_from_json(slot.at("H"), real.cfg.na, real.cfg.m));
    real.g.push_back(matrix_from_json(slot.at("G"), real.cfg.nb, real.cfg.m));
  }
  return real;
}

}  // namespace anadof
