// Python bindings for the core library: formulas, regions, channel sampling,
// scheme construction, and the numerical verification entry points.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anadof/analysis.hpp"
#include "anadof/entropy.hpp"
#include "anadof/sdof.hpp"

namespace py = pybind11;
using namespace anadof;

namespace {

py::object rational_to_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(r.num()), py::int_(r.den()));
}

py::list region_vertices(const SdofRegion& region) {
  py::list out;
  for (const auto& v : region.vertices)
    out.append(py::make_tuple(rational_to_fraction(v.first), rational_to_fraction(v.second)));
  return out;
}

py::list region_halfplanes(const SdofRegion& region) {
  py::list out;
  for (const auto& hp : region.halfplanes)
    out.append(py::make_tuple(rational_to_fraction(hp.a), rational_to_fraction(hp.b),
                              rational_to_fraction(hp.c)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Secrecy degrees of freedom of the two-user MIMO broadcast channel with delayed CSIT: "
      "closed-form values and regions, artificial-noise-alignment scheme construction, and "
      "numerical verification of rank and slope properties.";

  py::enum_<CsitMode>(mod, "CsitMode")
      .value("PERFECT", CsitMode::Perfect)
      .value("DELAYED", CsitMode::Delayed)
      .value("DELAYED_PARTIAL", CsitMode::DelayedPartial)
      .value("NONE", CsitMode::None);

  py::enum_<SchemeKind>(mod, "SchemeKind")
      .value("WIRETAP_THREE_PHASE", SchemeKind::WiretapThreePhase)
      .value("WIRETAP_PARTIAL_TWO_PHASE", SchemeKind::WiretapPartialTwoPhase)
      .value("BCC_FOUR_PHASE", SchemeKind::BccFourPhase)
      .value("MISO_FOUR_SLOT", SchemeKind::MisoFourSlot);

  py::class_<AntennaConfig>(mod, "AntennaConfig")
      .def(py::init<int, int, int>(), py::arg("m"), py::arg("na"), py::arg("nb"))
      .def_readonly("m", &AntennaConfig::m)
      .def_readonly("na", &AntennaConfig::na)
      .def_readonly("nb", &AntennaConfig::nb)
      .def("__repr__", [](const AntennaConfig& c) {
        return "AntennaConfig(m=" + std::to_string(c.m) + ", na=" + std::to_string(c.na) +
               ", nb=" + std::to_string(c.nb) + ")";
      });

  // Closed-form values, returned as exact fractions.
  mod.def(
      "sdof",
      [](int m, int na, int nb, const std::string& csit) {
        return rational_to_fraction(
            sdof_wiretap(AntennaConfig(m, na, nb), csit_mode_from_string(csit)));
      },
      py::arg("m"), py::arg("na"), py::arg("nb"), py::arg("csit") = "delayed",
      "Secrecy DoF of the MIMO wiretap channel under the given CSIT mode.");

  mod.def(
      "sum_sdof_pair",
      [](int m, int na, int nb) {
        const auto pt = bcc_sum_point(AntennaConfig(m, na, nb));
        return py::make_tuple(rational_to_fraction(pt.first), rational_to_fraction(pt.second));
      },
      py::arg("m"), py::arg("na"), py::arg("nb"),
      "Per-message corner of the confidential-broadcast region maximizing the sum.");

  mod.def(
      "sweep",
      [](int na, int nb, int m_min, int m_max) {
        py::list out;
        const std::vector<CsitMode> modes = {CsitMode::Perfect, CsitMode::Delayed,
                                             CsitMode::DelayedPartial, CsitMode::None};
        for (const auto& row : sweep_sdof(na, nb, m_min, m_max, modes)) {
          py::dict d;
          d["m"] = row.m;
          d["mode"] = to_string(row.mode);
          d["sdof"] = row.value ? rational_to_fraction(*row.value) : py::object(py::none());
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("na"), py::arg("nb"), py::arg("m_min"), py::arg("m_max"),
      "Closed-form sweep over m for all four CSIT modes.");

  mod.def(
      "region",
      [](int m, int na, int nb, const std::string& which) {
        const AntennaConfig cfg(m, na, nb);
        SdofRegion region;
        if (which == "sdof-delayed")
          region = bcc_region_delayed(cfg);
        else if (which == "sdof-perfect")
          region = bcc_region_perfect(cfg);
        else if (which == "dof-delayed")
          region = bc_dof_region_delayed(cfg);
        else
          throw std::invalid_argument("unknown region: " + which);
        py::dict out;
        out["halfplanes"] = region_halfplanes(region);
        out["vertices"] = region_vertices(region);
        out["full_dimensional"] = region.full_dimensional();
        return out;
      },
      py::arg("m"), py::arg("na"), py::arg("nb"), py::arg("which") = "sdof-delayed",
      "Rate region as half-planes a*dA + b*dB <= c and its corner points.");

  // Channel sampling and scheme construction.
  py::class_<ChannelRealization>(mod, "ChannelRealization")
      .def_readonly("cfg", &ChannelRealization::cfg)
      .def_readonly("h", &ChannelRealization::h)
      .def_readonly("g", &ChannelRealization::g)
      .def("slots", &ChannelRealization::slots);

  mod.def(
      "sample_states",
      [](int m, int na, int nb, std::size_t slots, std::uint64_t seed) {
        return sample_states(AntennaConfig(m, na, nb), slots, Seed(seed));
      },
      py::arg("m"), py::arg("na"), py::arg("nb"), py::arg("slots"), py::arg("seed") = 42,
      "Draw i.i.d. unit complex-Gaussian fading matrices for each slot.");

  py::class_<PhasePlan>(mod, "PhasePlan")
      .def_readonly("cfg", &PhasePlan::cfg)
      .def_readonly("requested_m", &PhasePlan::requested_m)
      .def_readonly("tau", &PhasePlan::tau)
      .def_readonly("total", &PhasePlan::total);

  py::class_<SchemeMatrices>(mod, "SchemeMatrices")
      .def_readonly("cfg", &SchemeMatrices::cfg)
      .def_readonly("plan", &SchemeMatrices::plan)
      .def_readonly("he", &SchemeMatrices::he)
      .def_readonly("ge", &SchemeMatrices::ge)
      .def_readonly("t_y", &SchemeMatrices::t_y)
      .def_readonly("t_z", &SchemeMatrices::t_z)
      .def_readonly("x_map", &SchemeMatrices::x_map)
      .def_readonly("noise_dim", &SchemeMatrices::noise_dim)
      .def_readonly("conf_dims", &SchemeMatrices::conf_dims)
      .def_readonly("power_scale", &SchemeMatrices::power_scale)
      .def("symbol_dim", &SchemeMatrices::symbol_dim);

  mod.def(
      "phase_plan",
      [](const std::string& kind, int m, int na, int nb) {
        return phase_plan(scheme_kind_from_string(kind), AntennaConfig(m, na, nb));
      },
      py::arg("kind"), py::arg("m"), py::arg("na"), py::arg("nb"),
      "Phase lengths for a scheme kind at the given antenna configuration.");

  mod.def(
      "build_scheme",
      [](const std::string& kind, int m, int na, int nb, const ChannelRealization& real) {
        return build_scheme(scheme_kind_from_string(kind), AntennaConfig(m, na, nb), real);
      },
      py::arg("kind"), py::arg("m"), py::arg("na"), py::arg("nb"), py::arg("realization"),
      "Assemble the transmission scheme's block matrices for one channel realization.");

  // Verification entry points; detailed reports are returned as JSON strings.
  mod.def(
      "verify_ranks_json",
      [](const SchemeMatrices& scheme, double tol) {
        return to_json(verify_ranks(scheme, tol)).dump();
      },
      py::arg("scheme"), py::arg("tol") = 1e-8,
      "Numeric-rank checks of decodability and alignment; JSON report string.");

  mod.def(
      "verify_ranks_pass",
      [](const SchemeMatrices& scheme, double tol) { return verify_ranks(scheme, tol).pass; },
      py::arg("scheme"), py::arg("tol") = 1e-8);

  mod.def(
      "mutual_info",
      [](const SchemeMatrices& scheme, double power, const std::string& receiver) {
        return mutual_info_legit(scheme, power, receiver == "B" ? Receiver::B : Receiver::A);
      },
      py::arg("scheme"), py::arg("power"), py::arg("receiver") = "A",
      "Mutual information in bits between a message and its legitimate observation.");

  mod.def(
      "leakage",
      [](const SchemeMatrices& scheme, double power, const std::string& message) {
        return leakage_eaves(scheme, power, message == "B" ? Receiver::B : Receiver::A);
      },
      py::arg("scheme"), py::arg("power"), py::arg("message") = "A",
      "Information leaked about a message to the unintended observation, in bits.");

  mod.def(
      "monte_carlo_sdof_json",
      [](const std::string& kind, int m, int na, int nb, int trials, std::vector<double> grid_db,
         std::uint64_t seed, double tol) {
        if (grid_db.empty()) grid_db = default_snr_grid();
        return to_json(monte_carlo_sdof(scheme_kind_from_string(kind), AntennaConfig(m, na, nb),
                                        trials, grid_db, Seed(seed), tol))
            .dump();
      },
      py::arg("kind"), py::arg("m"), py::arg("na"), py::arg("nb"), py::arg("trials") = 10,
      py::arg("grid_db") = std::vector<double>{}, py::arg("seed") = 42, py::arg("tol") = 0.05,
      "Monte-Carlo slope estimates of achieved secrecy DoF; JSON report string.");

  mod.def(
      "monte_carlo_sdof_pass",
      [](const std::string& kind, int m, int na, int nb, int trials, std::vector<double> grid_db,
         std::uint64_t seed, double tol) {
        if (grid_db.empty()) grid_db = default_snr_grid();
        return monte_carlo_sdof(scheme_kind_from_string(kind), AntennaConfig(m, na, nb), trials,
                                grid_db, Seed(seed), tol)
            .pass;
      },
      py::arg("kind"), py::arg("m"), py::arg("na"), py::arg("nb"), py::arg("trials") = 10,
      py::arg("grid_db") = std::vector<double>{}, py::arg("seed") = 42, py::arg("tol") = 0.05);

  // Entropy toolbox.
  py::class_<ExchangeableSource>(mod, "ExchangeableSource")
      .def_readonly("length", &ExchangeableSource::length)
      .def_readonly("alphabet", &ExchangeableSource::alphabet);

  mod.def(
      "random_source",
      [](int length, int alphabet, std::uint64_t seed) {
        return random_source(length, alphabet, Seed(seed));
      },
      py::arg("length"), py::arg("alphabet"), py::arg("seed") = 42,
      "Random finite mixture of i.i.d. sources (always entropy-symmetric).");

  mod.def(
      "joint_entropy",
      [](const ExchangeableSource& source, int k) { return joint_entropy(source, k); },
      py::arg("source"), py::arg("k"), "Exact joint entropy of the first k symbols, in bits.");

  mod.def(
      "entropy_profile",
      [](const ExchangeableSource& source) { return entropy_profile(source).h; },
      py::arg("source"), "h(x^0), h(x^1), ..., h(x^L) in bits.");

  mod.def(
      "check_entropy_symmetry",
      [](const ExchangeableSource& source, double tol) {
        return check_entropy_symmetry(source, tol);
      },
      py::arg("source"), py::arg("tol") = 1e-9);

  mod.def(
      "verify_essential_lemma_json",
      [](const ExchangeableSource& source, double tol) {
        return to_json(verify_essential_lemma(source, tol)).dump();
      },
      py::arg("source"), py::arg("tol") = 1e-9,
      "Entropy-increment and proportionality inequalities; JSON report string.");

  mod.attr("__version__") = "1.0.0";
}
