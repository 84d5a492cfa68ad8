#include "anadof/sdof.hpp"

#include <algorithm>

namespace anadof {
namespace {

const Rational kZero(0);

// Solves the 2x2 system {a1 x + b1 y = c1, a2 x + b2 y = c2}; empty when the
// lines are parallel or identical.
std::optional<std::pair<Rational, Rational>> intersect(const HalfPlane& p, const HalfPlane& q) {
  const Rational det = p.a * q.b - q.a * p.b;
  if (det == kZero) return std::nullopt;
  const Rational x = (p.c * q.b - q.c * p.b) / det;
  const Rational y = (p.a * q.c - q.a * p.c) / det;
  return std::make_pair(x, y);
}

bool satisfies(const std::vector<HalfPlane>& hps, const Rational& x, const Rational& y) {
  if (x < kZero || y < kZero) return false;
  for (const auto& hp : hps)
    if (hp.a * x + hp.b * y > hp.c) return false;
  return true;
}

SdofRegion make_region(std::vector<HalfPlane> hps) {
  SdofRegion region;
  region.halfplanes = std::move(hps);

  // Active constraints: the region half-planes plus both axes.
  std::vector<HalfPlane> lines = region.halfplanes;
  lines.push_back({Rational(-1), Rational(0), Rational(0)});  // dA >= 0
  lines.push_back({Rational(0), Rational(-1), Rational(0)});  // dB >= 0

  std::vector<std::pair<Rational, Rational>> verts;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (auto v = intersect(lines[i], lines[j]))
        if (satisfies(region.halfplanes, v->first, v->second))
          if (std::find(verts.begin(), verts.end(), *v) == verts.end()) verts.push_back(*v);

  // Counterclockwise along the boundary from the max-dA vertex: for a convex
  // region in the first quadrant this is dA descending, ties dB ascending.
  std::sort(verts.begin(), verts.end(), [](const auto& u, const auto& v) {
    if (u.first != v.first) return u.first > v.first;
    return u.second < v.second;
  });

  const bool has_x = std::any_of(verts.begin(), verts.end(),
                                 [](const auto& v) { return v.first > kZero; });
  const bool has_y = std::any_of(verts.begin(), verts.end(),
                                 [](const auto& v) { return v.second > kZero; });
  if (has_x && has_y)
    std::erase_if(verts, [](const auto& v) { return v.first == kZero && v.second == kZero; });

  region.vertices = std::move(verts);
  return region;
}

}  // namespace

bool SdofRegion::full_dimensional() const {
  const bool has_x = std::any_of(vertices.begin(), vertices.end(),
                                 [](const auto& v) { return v.first > kZero; });
  const bool has_y = std::any_of(vertices.begin(), vertices.end(),
                                 [](const auto& v) { return v.second > kZero; });
  return has_x && has_y;
}

Rational sdof_wiretap_delayed(const AntennaConfig& cfg) {
  const std::int64_t m = cfg.m, na = cfg.na, nb = cfg.nb;
  if (m <= nb) return Rational(0);
  if (m <= na) return Rational(m - nb);
  if (m <= na + nb) return Rational(na * m * (m - nb), na * nb + m * (m - nb));
  return Rational(na * (na + nb), na + 2 * nb);
}

Rational sdof_wiretap_partial(const AntennaConfig& cfg) {
  if (cfg.m <= cfg.max_rx())
    throw std::domain_error("partial CSIT SDoF requires m > max{na, nb}");
  const std::int64_t mc = cfg.m_capped();
  return Rational(cfg.na * (mc - cfg.nb), mc);
}

Rational sdof_wiretap(const AntennaConfig& cfg, CsitMode mode) {
  switch (mode) {
    case CsitMode::Perfect:
      return Rational(std::min<std::int64_t>(cfg.na, std::max(cfg.m - cfg.nb, 0)));
    case CsitMode::Delayed:
      return sdof_wiretap_delayed(cfg);
    case CsitMode::DelayedPartial:
      return sdof_wiretap_partial(cfg);
    case CsitMode::None:
      return Rational(std::max(std::min(cfg.m, cfg.na) - cfg.nb, 0));
  }
  throw std::invalid_argument("sdof_wiretap: bad CsitMode");
}

SdofRegion bcc_region_delayed(const AntennaConfig& cfg) {
  const int m = cfg.m, na = cfg.na, nb = cfg.nb;
  if (m <= cfg.min_rx())
    return make_region({{Rational(1), Rational(0), Rational(0)},
                        {Rational(0), Rational(1), Rational(0)}});
  if (m <= na)  // nb < m <= na: segment on the dA axis
    return make_region({{Rational(1, m - nb), Rational(0), Rational(1)},
                        {Rational(0), Rational(1), Rational(0)}});
  if (m <= nb)  // na < m <= nb: segment on the dB axis
    return make_region({{Rational(1), Rational(0), Rational(0)},
                        {Rational(0), Rational(1, m - na), Rational(1)}});
  const Rational ds_a = sdof_wiretap_delayed(cfg);
  const Rational ds_b = sdof_wiretap_delayed(cfg.swapped());
  const Rational mc(cfg.m_capped());
  return make_region({{Rational(1) / ds_a, Rational(1) / mc, Rational(1)},
                      {Rational(1) / mc, Rational(1) / ds_b, Rational(1)}});
}

std::pair<Rational, Rational> bcc_sum_point(const AntennaConfig& cfg) {
  if (cfg.m > cfg.max_rx()) {
    const std::int64_t mc = cfg.m_capped();
    return {Rational(cfg.na * (mc - cfg.nb), mc), Rational(cfg.nb * (mc - cfg.na), mc)};
  }
  const SdofRegion region = bcc_region_delayed(cfg);
  auto best = region.vertices.front();
  for (const auto& v : region.vertices)
    if (v.first + v.second > best.first + best.second) best = v;
  return best;
}

SdofRegion bc_dof_region_delayed(const AntennaConfig& cfg) {
  const Rational ka(std::min(cfg.m, cfg.na));
  const Rational kb(std::min(cfg.m, cfg.nb));
  const Rational ks(cfg.m_capped());
  return make_region({{Rational(1) / ka, Rational(1) / ks, Rational(1)},
                      {Rational(1) / ks, Rational(1) / kb, Rational(1)}});
}

SdofRegion bcc_region_perfect(const AntennaConfig& cfg) {
  if (cfg.m <= cfg.max_rx())
    throw std::domain_error("perfect CSIT secrecy region requires m > max{na, nb}");
  const Rational a(std::min(cfg.na, cfg.m - cfg.nb));
  const Rational b(std::min(cfg.nb, cfg.m - cfg.na));
  return make_region({{Rational(1) / a, Rational(0), Rational(1)},
                      {Rational(0), Rational(1) / b, Rational(1)}});
}

bool region_contains(const SdofRegion& region, const Rational& da, const Rational& db) {
  return satisfies(region.halfplanes, da, db);
}

std::vector<SweepRow> sweep_sdof(int na, int nb, int m_min, int m_max,
                                 const std::vector<CsitMode>& modes) {
  if (m_min < 1 || m_max < m_min) throw std::invalid_argument("sweep_sdof: bad m range");
  std::vector<SweepRow> rows;
  for (int m = m_min; m <= m_max; ++m) {
    const AntennaConfig cfg(m, na, nb);
    for (CsitMode mode : modes) {
      SweepRow row{m, mode, std::nullopt};
      if (mode != CsitMode::DelayedPartial || m > cfg.max_rx()) row.value = sdof_wiretap(cfg, mode);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace anadof
