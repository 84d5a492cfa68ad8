#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "anadof/rational.hpp"
#include "anadof/types.hpp"

namespace anadof {

/**
 * Half-plane a*dA + b*dB <= c with exact rational coefficients, normalized so
 * that c == 1 when c != 0, otherwise so the leading nonzero coefficient is 1.
 */
struct HalfPlane {
  Rational a, b, c;
  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

/**
 * Convex degrees-of-freedom region in the (dA, dB) quadrant: the half-plane
 * description plus its vertex list.
 *
 * Vertices are the pairwise intersections of active constraints (the region
 * half-planes and the two axes) that satisfy all constraints, deduplicated
 * and ordered counterclockwise starting from the vertex with maximum dA.
 * The origin is listed only for degenerate (segment or point) regions.
 */
struct SdofRegion {
  std::vector<HalfPlane> halfplanes;
  std::vector<std::pair<Rational, Rational>> vertices;

  bool full_dimensional() const;
  friend bool operator==(const SdofRegion&, const SdofRegion&) = default;
};

/// Secrecy DoF of the MIMO wiretap channel with delayed CSIT (receiver A
/// legitimate, receiver B eavesdropping). Valid for every antenna triple.
Rational sdof_wiretap_delayed(const AntennaConfig& cfg);

/// Secrecy DoF with delayed CSIT on one link only. Defined for
/// m > max{na, nb}; throws std::domain_error otherwise.
Rational sdof_wiretap_partial(const AntennaConfig& cfg);

/// Dispatch across CSIT modes: Perfect, Delayed, DelayedPartial, None.
Rational sdof_wiretap(const AntennaConfig& cfg, CsitMode mode);

/// SDoF region of the broadcast channel with confidential messages under
/// delayed CSIT. Handles the degenerate antenna ranges.
SdofRegion bcc_region_delayed(const AntennaConfig& cfg);

/// Corner of bcc_region_delayed maximizing dA + dB. For m > max{na, nb}
/// this is (na*(mc-nb)/mc, nb*(mc-na)/mc) with mc = min(m, na+nb).
std::pair<Rational, Rational> bcc_sum_point(const AntennaConfig& cfg);

/// DoF region of the same channel without secrecy constraints, delayed CSIT.
SdofRegion bc_dof_region_delayed(const AntennaConfig& cfg);

/// SDoF region under perfect CSIT (a rectangle); requires m > max{na, nb}.
SdofRegion bcc_region_perfect(const AntennaConfig& cfg);

/// Membership test, boundary inclusive; exact arithmetic throughout.
bool region_contains(const SdofRegion& region, const Rational& da, const Rational& db);

/// One row of a formula sweep; value is empty where the mode's formula does
/// not cover the antenna range (partial CSIT with m <= max{na, nb}).
struct SweepRow {
  int m;
  CsitMode mode;
  std::optional<Rational> value;
};

/// Formula sweep over m in [m_min, m_max] for the given modes, row-major in
/// (m, mode order as passed).
std::vector<SweepRow> sweep_sdof(int na, int nb, int m_min, int m_max,
                                 const std::vector<CsitMode>& modes);

}  // namespace anadof
