#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "anadof/analysis.hpp"
#include "anadof/entropy.hpp"
#include "anadof/sdof.hpp"

namespace {

using namespace anadof;

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string format_value(const Rational& r) {
  if (r.is_integer()) return r.str();
  return r.str() + " ≈ " + format_float(r.to_double());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
}

nlohmann::json rational_json(const Rational& r) { return {r.num(), r.den()}; }

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string csv = "m,mode,sdof_num,sdof_den,sdof_float\n";
  for (const auto& row : rows) {
    csv += std::to_string(row.m) + "," + to_string(row.mode) + ",";
    if (row.value)
      csv += std::to_string(row.value->num()) + "," + std::to_string(row.value->den()) + "," +
             format_float(row.value->to_double());
    else
      csv += ",,";
    csv += "\n";
  }
  return csv;
}

nlohmann::json sweep_json(int na, int nb, const std::vector<SweepRow>& rows) {
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json jr = {{"m", row.m}, {"mode", to_string(row.mode)}};
    if (row.value) {
      jr["sdof"] = rational_json(*row.value);
      jr["sdof_float"] = row.value->to_double();
    } else {
      jr["sdof"] = nullptr;
      jr["sdof_float"] = nullptr;
    }
    jrows.push_back(std::move(jr));
  }
  return {{"na", na}, {"nb", nb}, {"rows", jrows}};
}

nlohmann::json region_json(const std::string& which, const AntennaConfig& cfg,
                           const SdofRegion& region) {
  nlohmann::json halfplanes = nlohmann::json::array();
  for (const auto& hp : region.halfplanes)
    halfplanes.push_back(
        {{"a", rational_json(hp.a)}, {"b", rational_json(hp.b)}, {"c", rational_json(hp.c)}});
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : region.vertices)
    vertices.push_back({rational_json(v.first), rational_json(v.second)});
  return {{"which", which},
          {"cfg", {{"m", cfg.m}, {"na", cfg.na}, {"nb", cfg.nb}}},
          {"halfplanes", halfplanes},
          {"vertices", vertices},
          {"full_dimensional", region.full_dimensional()}};
}

std::string region_csv(const SdofRegion& region) {
  std::string csv = "type,a,b,c\n";
  for (const auto& hp : region.halfplanes)
    csv += "halfplane," + hp.a.str() + "," + hp.b.str() + "," + hp.c.str() + "\n";
  for (const auto& v : region.vertices)
    csv += "vertex," + v.first.str() + "," + v.second.str() + ",\n";
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy degrees of freedom of the two-user MIMO broadcast channel with "
               "delayed CSIT: closed-form values, regions, artificial-noise-alignment scheme "
               "construction, and numerical verification."};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- sdof ----------------------------------------------------------
  int m = 2, na = 1, nb = 1;
  std::string csit = "delayed";
  auto* cmd_sdof = app.add_subcommand("sdof", "Closed-form secrecy DoF for one configuration");
  cmd_sdof->add_option("--m", m, "transmit antennas")->required();
  cmd_sdof->add_option("--na", na, "receiver A antennas")->required();
  cmd_sdof->add_option("--nb", nb, "receiver B antennas")->required();
  cmd_sdof->add_option("--csit", csit, "CSIT mode: perfect|delayed|partial|no")
      ->default_val("delayed");
  cmd_sdof->callback([&]() {
    const Rational value = sdof_wiretap(AntennaConfig(m, na, nb), csit_mode_from_string(csit));
    std::cout << format_value(value) << "\n";
  });

  // ---- sweep ---------------------------------------------------------
  int s_na = 1, s_nb = 1, m_min = 1, m_max = 1;
  std::vector<std::string> s_modes;
  std::string s_format = "csv", s_out;
  auto* cmd_sweep = app.add_subcommand("sweep", "Formula sweep over a range of m");
  cmd_sweep->add_option("--na", s_na, "receiver A antennas")->required();
  cmd_sweep->add_option("--nb", s_nb, "receiver B antennas")->required();
  cmd_sweep->add_option("--m-min", m_min, "smallest m")->required();
  cmd_sweep->add_option("--m-max", m_max, "largest m")->required();
  cmd_sweep->add_option("--csit", s_modes, "modes to include (default: all four)")
      ->delimiter(',');
  cmd_sweep->add_option("--format", s_format, "csv|json")->default_val("csv");
  cmd_sweep->add_option("--out", s_out, "write to file instead of stdout");
  cmd_sweep->callback([&]() {
    std::vector<CsitMode> modes;
    if (s_modes.empty())
      modes = {CsitMode::Perfect, CsitMode::Delayed, CsitMode::DelayedPartial, CsitMode::None};
    else
      for (const auto& name : s_modes) modes.push_back(csit_mode_from_string(name));
    const auto rows = sweep_sdof(s_na, s_nb, m_min, m_max, modes);
    if (s_format == "csv")
      emit(sweep_csv(rows), s_out);
    else if (s_format == "json")
      emit(sweep_json(s_na, s_nb, rows).dump(2) + "\n", s_out);
    else
      throw std::invalid_argument("unknown format: " + s_format);
  });

  // ---- region --------------------------------------------------------
  int r_m = 2, r_na = 1, r_nb = 1;
  std::string r_which = "sdof-delayed", r_format = "json", r_out;
  auto* cmd_region = app.add_subcommand("region", "DoF/SDoF region half-planes and vertices");
  cmd_region->add_option("--m", r_m, "transmit antennas")->required();
  cmd_region->add_option("--na", r_na, "receiver A antennas")->required();
  cmd_region->add_option("--nb", r_nb, "receiver B antennas")->required();
  cmd_region->add_option("--which", r_which, "sdof-delayed|sdof-perfect|dof-delayed")
      ->default_val("sdof-delayed");
  cmd_region->add_option("--format", r_format, "json|csv")->default_val("json");
  cmd_region->add_option("--out", r_out, "write to file instead of stdout");
  cmd_region->callback([&]() {
    const AntennaConfig cfg(r_m, r_na, r_nb);
    SdofRegion region;
    if (r_which == "sdof-delayed")
      region = bcc_region_delayed(cfg);
    else if (r_which == "sdof-perfect")
      region = bcc_region_perfect(cfg);
    else if (r_which == "dof-delayed")
      region = bc_dof_region_delayed(cfg);
    else
      throw std::invalid_argument("unknown region: " + r_which);
    if (r_format == "json")
      emit(region_json(r_which, cfg, region).dump(2) + "\n", r_out);
    else if (r_format == "csv")
      emit(region_csv(region), r_out);
    else
      throw std::invalid_argument("unknown format: " + r_format);
  });

  // ---- simulate ------------------------------------------------------
  std::string k_kind = "wiretap3", k_out;
  int k_m = 5, k_na = 3, k_nb = 2, k_trials = 10;
  std::uint64_t k_seed = 42;
  double k_tol = 1e-10, k_sdof_tol = 0.05;
  std::vector<double> k_grid = default_snr_grid();
  auto* cmd_sim = app.add_subcommand(
      "simulate", "Monte-Carlo scheme verification: ranks and mutual-information slopes");
  cmd_sim->add_option("--kind", k_kind, "wiretap3|partial2|bcc4|miso4")->default_val("wiretap3");
  cmd_sim->add_option("--m", k_m, "transmit antennas")->required();
  cmd_sim->add_option("--na", k_na, "receiver A antennas")->required();
  cmd_sim->add_option("--nb", k_nb, "receiver B antennas")->required();
  cmd_sim->add_option("--trials", k_trials, "Monte-Carlo trials")->default_val(10);
  cmd_sim->add_option("--grid-db", k_grid, "SNR grid in dB, comma separated")->delimiter(',');
  cmd_sim->add_option("--seed", k_seed, "RNG seed")->envname("ANA_DOF_SEED")->default_val(42);
  cmd_sim->add_option("--tol", k_tol, "rank tolerance")->default_val(1e-10);
  cmd_sim->add_option("--sdof-tol", k_sdof_tol, "allowed |estimate - theory| per slot")
      ->default_val(0.05);
  cmd_sim->add_option("--out", k_out, "write to file instead of stdout");
  cmd_sim->callback([&]() {
    const SchemeKind kind = scheme_kind_from_string(k_kind);
    const AntennaConfig cfg(k_m, k_na, k_nb);
    SdofVerification verification =
        monte_carlo_sdof(kind, cfg, k_trials, k_grid, Seed(k_seed), k_sdof_tol);

    // Rank identities on the first trial's realization.
    const PhasePlan plan = phase_plan(kind, cfg);
    const ChannelRealization real =
        sample_states(plan.cfg, static_cast<std::size_t>(plan.total),
                      derive_seed(derive_seed(Seed(k_seed), seed_domain::kTrial), 0));
    const RankReport ranks = verify_ranks(build_scheme(kind, cfg, real), k_tol);

    nlohmann::json j = to_json(verification);
    j["ranks"] = to_json(ranks);
    const bool pass = verification.pass && ranks.pass;
    j["pass"] = pass;
    emit(j.dump(2) + "\n", k_out);
    if (!pass) exit_code = 1;
  });

  // ---- verify-lemma --------------------------------------------------
  int v_count = 1000, v_lmax = 5, v_q = 2;
  std::uint64_t v_seed = 42;
  double v_tol = 1e-9;
  std::string v_out;
  bool v_inject = false;
  auto* cmd_lemma = app.add_subcommand(
      "verify-lemma", "Entropy lemma check over random exchangeable mixture sources");
  cmd_lemma->add_option("--count", v_count, "number of random sources")->default_val(1000);
  cmd_lemma->add_option("--l-max", v_lmax, "largest sequence length")->default_val(5);
  cmd_lemma->add_option("--q", v_q, "alphabet size")->default_val(2);
  cmd_lemma->add_option("--seed", v_seed, "RNG seed")->envname("ANA_DOF_SEED")->default_val(42);
  cmd_lemma->add_option("--tol", v_tol, "entropy tolerance in bits")->default_val(1e-9);
  cmd_lemma->add_flag("--inject-nonexchangeable", v_inject,
                      "prepend a non-exchangeable joint (test hook)");
  cmd_lemma->add_option("--out", v_out, "write to file instead of stdout");
  cmd_lemma->callback([&]() {
    nlohmann::json hypothesis_violations = nlohmann::json::array();
    nlohmann::json counterexamples = nlohmann::json::array();
    double min1 = 0.0, min2 = 0.0;
    bool have_margins = false;
    int checked = 0;

    if (v_inject) {
      // x2 copies x1, x3 independent: entropy-symmetry hypothesis fails, so
      // this must be reported as a hypothesis violation, not a lemma failure.
      DiscreteJoint joint;
      joint.length = 3;
      joint.alphabet = 2;
      joint.probs.assign(8, 0.0);
      for (int x1 = 0; x1 < 2; ++x1)
        for (int x3 = 0; x3 < 2; ++x3) joint.probs[x1 + 2 * x1 + 4 * x3] = 0.25;
      if (!check_entropy_symmetry(joint, v_tol))
        hypothesis_violations.push_back(
            {{"index", -1}, {"note", "injected joint is not entropy-symmetric"}});
    }

    const Seed base = derive_seed(Seed(v_seed), seed_domain::kTrial);
    for (int i = 0; i < v_count; ++i) {
      const int length = v_lmax <= 2 ? v_lmax : 2 + i % (v_lmax - 1);
      const ExchangeableSource source = random_source(length, v_q, derive_seed(base, i));
      if (!check_entropy_symmetry(source, v_tol)) {
        hypothesis_violations.push_back({{"index", i}, {"note", "source not entropy-symmetric"}});
        continue;
      }
      const LemmaReport report = verify_essential_lemma(source, v_tol);
      ++checked;
      if (!have_margins) {
        min1 = report.min_margin_increments;
        min2 = report.min_margin_proportionality;
        have_margins = true;
      } else {
        min1 = std::min(min1, report.min_margin_increments);
        min2 = std::min(min2, report.min_margin_proportionality);
      }
      if (!report.pass) counterexamples.push_back({{"index", i}, {"report", to_json(report)}});
    }

    const bool pass = counterexamples.empty();
    nlohmann::json j = {{"count", v_count},
                        {"l_max", v_lmax},
                        {"q", v_q},
                        {"seed", v_seed},
                        {"tol", v_tol},
                        {"sources_checked", checked},
                        {"min_margin_increments", min1},
                        {"min_margin_proportionality", min2},
                        {"hypothesis_violations", hypothesis_violations},
                        {"counterexamples", counterexamples},
                        {"pass", pass}};
    emit(j.dump(2) + "\n", v_out);
    if (!pass) exit_code = 1;
  });

  // ---- dump-channel --------------------------------------------------
  int c_m = 2, c_na = 1, c_nb = 1, c_slots = 1;
  std::uint64_t c_seed = 42;
  std::string c_out;
  auto* cmd_chan = app.add_subcommand("dump-channel", "Sample a channel realization as JSON");
  cmd_chan->add_option("--m", c_m, "transmit antennas")->required();
  cmd_chan->add_option("--na", c_na, "receiver A antennas")->required();
  cmd_chan->add_option("--nb", c_nb, "receiver B antennas")->required();
  cmd_chan->add_option("--slots", c_slots, "number of slots")->required();
  cmd_chan->add_option("--seed", c_seed, "RNG seed")->envname("ANA_DOF_SEED")->default_val(42);
  cmd_chan->add_option("--out", c_out, "write to file instead of stdout");
  cmd_chan->callback([&]() {
    const auto real = sample_states(AntennaConfig(c_m, c_na, c_nb),
                                    static_cast<std::size_t>(c_slots), Seed(c_seed));
    nlohmann::json j = dump_realization(real);
    j["seed"] = c_seed;
    emit(j.dump(2) + "\n", c_out);
  });

  // ---- dump-scheme ---------------------------------------------------
  std::string d_kind = "wiretap3", d_out;
  int d_m = 5, d_na = 3, d_nb = 2;
  std::uint64_t d_seed = 42;
  auto* cmd_dump = app.add_subcommand("dump-scheme", "Scheme block shapes and sparsity masks");
  cmd_dump->add_option("--kind", d_kind, "wiretap3|partial2|bcc4|miso4")->default_val("wiretap3");
  cmd_dump->add_option("--m", d_m, "transmit antennas")->required();
  cmd_dump->add_option("--na", d_na, "receiver A antennas")->required();
  cmd_dump->add_option("--nb", d_nb, "receiver B antennas")->required();
  cmd_dump->add_option("--seed", d_seed, "RNG seed")->envname("ANA_DOF_SEED")->default_val(42);
  cmd_dump->add_option("--out", d_out, "write to file instead of stdout");
  cmd_dump->callback([&]() {
    const SchemeKind kind = scheme_kind_from_string(d_kind);
    const AntennaConfig cfg(d_m, d_na, d_nb);
    const PhasePlan plan = phase_plan(kind, cfg);
    const auto real =
        sample_states(plan.cfg, static_cast<std::size_t>(plan.total), Seed(d_seed));
    emit(dump_scheme_shapes(build_scheme(kind, cfg, real)).dump(2) + "\n", d_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
