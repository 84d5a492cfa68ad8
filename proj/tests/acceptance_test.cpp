// Acceptance gate for the anadof library: every release-blocking claim is
// checked here, one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure.  Tolerances and time budgets are pinned next to each check.
//
// Build target: anadof_acceptance (plain main, no test framework).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "anadof/analysis.hpp"
#include "anadof/channel.hpp"
#include "anadof/entropy.hpp"
#include "anadof/schemes.hpp"
#include "anadof/sdof.hpp"

using namespace anadof;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Gate {
  int passed = 0;
  int failed = 0;

  void report(int index, const char* label, bool ok, double elapsed_ms,
              const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", index, label,
                elapsed_ms, detail.empty() ? "" : " -- ", detail.c_str());
    (ok ? passed : failed) += 1;
  }
};

// Uniform integer in [lo, hi] from the library's deterministic stream.
int draw(GaussianStream& stream, int lo, int hi) {
  return lo + static_cast<int>(stream.next_unit() * (hi - lo + 1));
}

bool contains_vertex(const SdofRegion& region, const Rational& da, const Rational& db) {
  for (const auto& v : region.vertices)
    if (v.first == da && v.second == db) return true;
  return false;
}

SchemeMatrices seeded_scheme(SchemeKind kind, const AntennaConfig& cfg, std::uint64_t seed) {
  const PhasePlan plan = phase_plan(kind, cfg);
  const auto real = sample_states(plan.cfg, static_cast<std::size_t>(plan.total), Seed(seed));
  return build_scheme(kind, cfg, real);
}

// ---------------------------------------------------------------------------
// 1. Closed-form spot values, exact rational arithmetic.  Budget: 1 ms.
// ---------------------------------------------------------------------------
bool criterion_spot_values(std::string& detail) {
  bool ok = true;
  ok &= sdof_wiretap_delayed(AntennaConfig(2, 1, 1)) == Rational(2, 3);

  const auto sum_532 = bcc_sum_point(AntennaConfig(5, 3, 2));
  ok &= sum_532.first == Rational(9, 5) && sum_532.second == Rational(4, 5);

  const auto sum_211 = bcc_sum_point(AntennaConfig(2, 1, 1));
  ok &= sum_211.first == Rational(1, 2) && sum_211.second == Rational(1, 2);

  const SdofRegion dof = bc_dof_region_delayed(AntennaConfig(5, 3, 2));
  ok &= contains_vertex(dof, Rational(45, 19), Rational(20, 19));

  if (!ok) detail = "a closed-form value disagrees with its frozen oracle";
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Formula sweep at nA=3, nB=2 over m = 1..8, all four CSIT modes, exact.
//    Budget: 10 ms.
// ---------------------------------------------------------------------------
bool criterion_sweep(std::string& detail) {
  const std::vector<CsitMode> modes = {CsitMode::Perfect, CsitMode::Delayed,
                                       CsitMode::DelayedPartial, CsitMode::None};
  const auto rows = sweep_sdof(3, 2, 1, 8, modes);
  if (rows.size() != 32) {
    detail = "expected 32 sweep rows, got " + std::to_string(rows.size());
    return false;
  }

  auto at = [&](int m, CsitMode mode) -> const SweepRow& {
    for (const auto& row : rows)
      if (row.m == m && row.mode == mode) return row;
    throw std::logic_error("sweep row missing");
  };
  auto is = [&](int m, CsitMode mode, Rational want) {
    const auto& row = at(m, mode);
    return row.value.has_value() && *row.value == want;
  };

  bool ok = true;
  // delayed CSIT curve: 0, 0, 1, 12/7, then saturated at 15/7
  const Rational delayed[8] = {Rational(0),     Rational(0),     Rational(1),     Rational(12, 7),
                               Rational(15, 7), Rational(15, 7), Rational(15, 7), Rational(15, 7)};
  for (int m = 1; m <= 8; ++m) ok &= is(m, CsitMode::Delayed, delayed[m - 1]);

  // delayed-partial curve is undefined for m <= 3, then 3/2 and saturates at 9/5
  for (int m = 1; m <= 3; ++m) ok &= !at(m, CsitMode::DelayedPartial).value.has_value();
  ok &= is(4, CsitMode::DelayedPartial, Rational(3, 2));
  for (int m = 5; m <= 8; ++m) ok &= is(m, CsitMode::DelayedPartial, Rational(9, 5));

  // perfect CSIT: min{nA, (m - nB)+}
  const Rational perfect[8] = {Rational(0), Rational(0), Rational(1), Rational(2),
                               Rational(3), Rational(3), Rational(3), Rational(3)};
  for (int m = 1; m <= 8; ++m) ok &= is(m, CsitMode::Perfect, perfect[m - 1]);

  // no CSIT: (min{m, nA} - nB)+, constant 1 from m = 3 on
  for (int m = 1; m <= 2; ++m) ok &= is(m, CsitMode::None, Rational(0));
  for (int m = 3; m <= 8; ++m) ok &= is(m, CsitMode::None, Rational(1));

  if (!ok) detail = "sweep values differ from the frozen curves";
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Phase-length identities on 50 random antenna configs with
//    max{nA, nB} < m <= nA + nB: the wiretap plan spans nA nB + m (m - nB)
//    slots and the broadcast plan spans m^2 slots, exactly.
// ---------------------------------------------------------------------------
bool criterion_phase_plans(std::string& detail) {
  GaussianStream stream{Seed(20260819)};
  int checked = 0;
  for (int it = 0; it < 200 && checked < 50; ++it) {
    const int na = draw(stream, 1, 6);
    const int nb = draw(stream, 1, 6);
    const int lo = std::max(na, nb) + 1;
    const int hi = na + nb;
    if (lo > hi) continue;
    const int m = draw(stream, lo, hi);
    const AntennaConfig cfg(m, na, nb);

    const PhasePlan wiretap = phase_plan(SchemeKind::WiretapThreePhase, cfg);
    long long total_w = 0;
    for (int t : wiretap.tau) total_w += t;
    if (total_w != static_cast<long long>(na) * nb + static_cast<long long>(m) * (m - nb) ||
        total_w != wiretap.total) {
      detail = "wiretap plan length mismatch at m=" + std::to_string(m) +
               " nA=" + std::to_string(na) + " nB=" + std::to_string(nb);
      return false;
    }

    const PhasePlan bcc = phase_plan(SchemeKind::BccFourPhase, cfg);
    long long total_b = 0;
    for (int t : bcc.tau) total_b += t;
    if (total_b != static_cast<long long>(m) * m || total_b != bcc.total) {
      detail = "broadcast plan length mismatch at m=" + std::to_string(m) +
               " nA=" + std::to_string(na) + " nB=" + std::to_string(nb);
      return false;
    }
    ++checked;
  }
  if (checked != 50) {
    detail = "only sampled " + std::to_string(checked) + " admissible configs";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 4. Alignment / noise-filling rank identities over 100 seeded trials per
//    config and scheme at tolerance 1e-8: the structural identities must hold
//    in 100/100 trials; the square decoding matrices must be invertible in at
//    least 99/100 (they fail only on measure-zero channel draws).
//    Budget: 30 s.
// ---------------------------------------------------------------------------
bool criterion_rank_identities(std::string& detail) {
  constexpr double kRankTol = 1e-8;
  constexpr int kTrials = 100;
  const AntennaConfig configs[] = {AntennaConfig(5, 3, 2), AntennaConfig(4, 3, 2),
                                   AntennaConfig(2, 1, 1), AntennaConfig(5, 2, 3)};
  const SchemeKind kinds[] = {SchemeKind::WiretapThreePhase, SchemeKind::BccFourPhase};

  int cfg_index = 0;
  for (const auto& cfg : configs) {
    int kind_index = 0;
    for (SchemeKind kind : kinds) {
      int invertible_ok = 0;
      int structural_fail = 0;
      for (int trial = 0; trial < kTrials; ++trial) {
        const Seed seed =
            derive_seed(derive_seed(Seed(42), static_cast<std::uint64_t>(cfg_index * 8 + kind_index)),
                        static_cast<std::uint64_t>(trial));
        const RankReport report = verify_ranks(seeded_scheme(kind, cfg, seed.value), kRankTol);
        bool invertible = true;
        for (const auto& check : report.checks) {
          const bool is_invertibility = check.name.find("invertible") != std::string::npos;
          if (is_invertibility)
            invertible &= check.pass;
          else if (!check.pass)
            ++structural_fail;
        }
        invertible_ok += invertible ? 1 : 0;
      }
      if (structural_fail != 0 || invertible_ok < 99) {
        detail = "config (" + std::to_string(cfg.m) + "," + std::to_string(cfg.na) + "," +
                 std::to_string(cfg.nb) + ") " + to_string(kind) + ": " +
                 std::to_string(structural_fail) + " structural failures, " +
                 std::to_string(invertible_ok) + "/100 invertible";
        return false;
      }
      ++kind_index;
    }
    ++cfg_index;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5. Monte-Carlo mutual-information slopes: per-slot secrecy rates within
//    0.05 of the closed forms on the 40/60/80/100 dB grid with 10 trials,
//    leakage slopes within 0.05 of zero, and with the artificial noise
//    removed the leakage slope must rise above 0.5 bits per log2 P over the
//    whole block (the scheme leaks without it).  Budget: 120 s.
// ---------------------------------------------------------------------------
bool criterion_slopes(std::string& detail) {
  constexpr double kSdofTol = 0.05;
  constexpr int kTrials = 10;
  const std::vector<double> grid = default_snr_grid();
  const Seed seed(42);

  struct Case {
    SchemeKind kind;
    AntennaConfig cfg;
    Rational want_a;
    Rational want_b;  // 0/1 marks "no second message"
  };
  const Case cases[] = {
      {SchemeKind::WiretapThreePhase, AntennaConfig(5, 3, 2), Rational(15, 7), Rational(0)},
      {SchemeKind::WiretapThreePhase, AntennaConfig(2, 1, 1), Rational(2, 3), Rational(0)},
      {SchemeKind::WiretapPartialTwoPhase, AntennaConfig(5, 3, 2), Rational(9, 5), Rational(0)},
      {SchemeKind::BccFourPhase, AntennaConfig(5, 3, 2), Rational(9, 5), Rational(4, 5)},
      {SchemeKind::MisoFourSlot, AntennaConfig(2, 1, 1), Rational(1, 2), Rational(1, 2)},
  };

  for (const auto& c : cases) {
    const SdofVerification v = monte_carlo_sdof(c.kind, c.cfg, kTrials, grid, seed, kSdofTol);
    const bool has_b = v.b.has_value();
    bool ok = v.pass && v.a.theory == c.want_a;
    ok &= std::abs(v.a.sdof_mean - c.want_a.to_double()) <= kSdofTol;
    ok &= std::abs(v.a.leakage_mean) <= kSdofTol;
    if (c.kind == SchemeKind::BccFourPhase || c.kind == SchemeKind::MisoFourSlot) {
      ok &= has_b && v.b->theory == c.want_b;
      if (has_b) {
        ok &= std::abs(v.b->sdof_mean - c.want_b.to_double()) <= kSdofTol;
        ok &= std::abs(v.b->leakage_mean) <= kSdofTol;
      }
    } else {
      ok &= !has_b;
    }
    if (!ok) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s (%d,%d,%d): mean %.4f vs %s", to_string(c.kind).c_str(),
                    c.cfg.m, c.cfg.na, c.cfg.nb, v.a.sdof_mean, c.want_a.str().c_str());
      detail = buf;
      return false;
    }
  }

  // Remove the artificial noise (zero its columns in the eavesdropper map):
  // the confidential message must now leak with a clearly positive slope.
  SchemeMatrices bare = seeded_scheme(SchemeKind::WiretapThreePhase, AntennaConfig(5, 3, 2), 42);
  const auto [ubegin, ulen] = bare.symbol_block(0);
  bare.t_z.middleCols(ubegin, ulen).setZero();
  const double slots = static_cast<double>(bare.plan.total);
  const double leak_per_slot = slope_estimate(leakage_curve(bare, grid)).slope / slots;
  if (!(leak_per_slot >= 0.5 / slots)) {
    detail = "noise-free leakage slope " + std::to_string(leak_per_slot * slots) +
             " should exceed 0.5";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 6. Numerical rank lemma: the log-det slope of I + P A A^H recovers rank(A)
//    within 0.01 for 100 seeded complex matrices up to 8x8, including
//    rank-deficient products.  Grid 80..200 dB so every nonzero singular
//    value is far above the noise floor at the lowest point.
// ---------------------------------------------------------------------------
bool criterion_rank_lemma(std::string& detail) {
  constexpr double kSlopeTol = 0.01;
  const std::vector<double> grid = {80.0, 120.0, 160.0, 200.0};
  GaussianStream stream{Seed(777)};

  for (int it = 0; it < 100; ++it) {
    const int rows = draw(stream, 1, 8);
    const int cols = draw(stream, 1, 8);
    Eigen::MatrixXcd a(rows, cols);
    if (it % 2 == 0) {
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = stream.next_cgauss();
    } else {
      // rank-deficient: product through an inner dimension below min(rows, cols)
      const int k = draw(stream, 1, std::max(1, std::min(rows, cols)));
      Eigen::MatrixXcd left(rows, k), right(k, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < k; ++j) left(i, j) = stream.next_cgauss();
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < cols; ++j) right(i, j) = stream.next_cgauss();
      a = left * right;
    }
    const auto expected = static_cast<double>(numeric_rank(a));
    const double slope = rank_lemma_check(a, grid).slope;
    if (std::abs(slope - expected) > kSlopeTol) {
      detail = "matrix " + std::to_string(it) + " (" + std::to_string(rows) + "x" +
               std::to_string(cols) + "): slope " + std::to_string(slope) + " vs rank " +
               std::to_string(static_cast<int>(expected));
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 7. Entropy inequalities on exchangeable mixtures: over 1000 seeded sources
//    with length <= 5 and alphabet <= 3, every increment and proportionality
//    margin stays above -1e-9 bits, and the i.i.d. boundary case achieves
//    proportionality with equality.  Budget: 10 s.
// ---------------------------------------------------------------------------
bool criterion_entropy_lemma(std::string& detail) {
  constexpr double kMarginTol = 1e-9;

  // i.i.d. fair bits: M h(x^N) = N h(x^M) exactly, the equality boundary.
  ExchangeableSource iid;
  iid.length = 5;
  iid.alphabet = 2;
  iid.components = {{1.0, {0.5, 0.5}}};
  const LemmaReport boundary = verify_essential_lemma(iid);
  if (!boundary.pass || std::abs(boundary.min_margin_proportionality) > kMarginTol) {
    detail = "i.i.d. boundary case is off the equality line";
    return false;
  }

  double worst_inc = 0.0, worst_prop = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int length = 2 + i % 4;          // 2..5
    const int alphabet = 2 + (i / 4) % 2;  // 2..3
    const auto source = random_source(length, alphabet, derive_seed(Seed(7), i));
    const LemmaReport report = verify_essential_lemma(source, kMarginTol);
    worst_inc = std::min(worst_inc, report.min_margin_increments);
    worst_prop = std::min(worst_prop, report.min_margin_proportionality);
    if (!report.pass) {
      detail = "source " + std::to_string(i) + " violates the inequalities";
      return false;
    }
  }
  if (worst_inc < -kMarginTol || worst_prop < -kMarginTol) {
    detail = "margins dipped to " + std::to_string(std::min(worst_inc, worst_prop));
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. Exact region and formula properties over 200 random configs with
//    m <= 10: swap symmetry, CSIT mode ordering, sum-point tightness and the
//    secrecy region sitting inside the non-secret DoF region.
// ---------------------------------------------------------------------------
bool criterion_properties(std::string& detail) {
  GaussianStream stream{Seed(31337)};
  for (int it = 0; it < 200; ++it) {
    const int m = draw(stream, 1, 10);
    const int na = draw(stream, 1, 5);
    const int nb = draw(stream, 1, 5);
    const AntennaConfig cfg(m, na, nb);
    const AntennaConfig mirror(m, nb, na);
    const auto fail = [&](const char* what) {
      detail = std::string(what) + " at (" + std::to_string(m) + "," + std::to_string(na) + "," +
               std::to_string(nb) + ")";
      return false;
    };

    // swap symmetry: the region of the mirrored config is the mirrored region
    const SdofRegion region = bcc_region_delayed(cfg);
    const SdofRegion region_m = bcc_region_delayed(mirror);
    if (region.vertices.size() != region_m.vertices.size()) return fail("vertex count asymmetry");
    for (const auto& v : region.vertices)
      if (!contains_vertex(region_m, v.second, v.first)) return fail("swap asymmetry");

    // more CSIT never hurts: none <= delayed-partial <= delayed <= perfect
    const Rational d_none = sdof_wiretap(cfg, CsitMode::None);
    const Rational d_delayed = sdof_wiretap(cfg, CsitMode::Delayed);
    const Rational d_perfect = sdof_wiretap(cfg, CsitMode::Perfect);
    if (!(d_none <= d_delayed && d_delayed <= d_perfect)) return fail("mode ordering");
    if (m > cfg.max_rx()) {
      const Rational d_partial = sdof_wiretap(cfg, CsitMode::DelayedPartial);
      if (!(d_none <= d_partial && d_partial <= d_delayed)) return fail("partial ordering");
    }

    // the sum point lies in the region; on a full-dimensional region it is
    // tight on both faces
    const auto [dsa, dsb] = bcc_sum_point(cfg);
    if (!region_contains(region, dsa, dsb)) return fail("sum point outside region");
    if (region.full_dimensional()) {
      if (region.halfplanes.size() != 2) return fail("unexpected face count");
      for (const auto& hp : region.halfplanes)
        if (hp.a * dsa + hp.b * dsb != hp.c) return fail("sum point not tight");
    }

    // secrecy can only shrink the region
    const SdofRegion dof = bc_dof_region_delayed(cfg);
    for (const auto& v : region.vertices)
      if (!region_contains(dof, v.first, v.second)) return fail("secrecy region too large");
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  std::string detail;
  Clock::time_point t0;
  double elapsed;
  bool ok;

  std::printf("anadof acceptance gate\n======================\n");

  detail.clear();
  t0 = Clock::now();
  ok = criterion_spot_values(detail);
  elapsed = ms_since(t0);
  if (elapsed > 1.0) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded 1 ms budget");
  }
  gate.report(1, "closed-form spot values are exact", ok, elapsed, detail);

  detail.clear();
  t0 = Clock::now();
  ok = criterion_sweep(detail);
  elapsed = ms_since(t0);
  if (elapsed > 10.0) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded 10 ms budget");
  }
  gate.report(2, "antenna sweep reproduces all four CSIT curves", ok, elapsed, detail);

  detail.clear();
  t0 = Clock::now();
  ok = criterion_phase_plans(detail);
  gate.report(3, "phase plans satisfy the slot-count identities", ok, ms_since(t0), detail);

  detail.clear();
  t0 = Clock::now();
  ok = criterion_rank_identities(detail);
  elapsed = ms_since(t0);
  if (elapsed > 30000.0) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded 30 s budget");
  }
  gate.report(4, "alignment rank identities hold across seeded trials", ok, elapsed, detail);

  detail.clear();
  t0 = Clock::now();
  ok = criterion_slopes(detail);
  elapsed = ms_since(t0);
  if (elapsed > 120000.0) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded 120 s budget");
  }
  gate.report(5, "mutual-information slopes match the closed forms", ok, elapsed, detail);

  detail.clear();
  t0 = Clock::now();
  ok = criterion_rank_lemma(detail);
  gate.report(6, "log-det slopes recover matrix rank", ok, ms_since(t0), detail);

  detail.clear();
  t0 = Clock::now();
  ok = criterion_entropy_lemma(detail);
  elapsed = ms_since(t0);
  if (elapsed > 10000.0) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded 10 s budget");
  }
  gate.report(7, "entropy inequality margins stay nonnegative", ok, elapsed, detail);

  detail.clear();
  t0 = Clock::now();
  ok = criterion_properties(detail);
  gate.report(8, "exact region and ordering properties hold", ok, ms_since(t0), detail);

  std::printf("----------------------\n%d/%d criteria passed\n", gate.passed,
              gate.passed + gate.failed);
  return gate.failed == 0 ? 0 : 1;
}
