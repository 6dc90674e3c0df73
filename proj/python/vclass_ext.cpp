#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vclass/distributions.hpp"
#include "vclass/errors.hpp"
#include "vclass/extremal.hpp"
#include "vclass/metrics.hpp"
#include "vclass/specfun.hpp"
#include "vclass/verify.hpp"

namespace py = pybind11;
using namespace vclass;

namespace {

DiscreteDistribution from_pairs(const std::vector<std::pair<double, double>>& pairs) {
  std::vector<Atom> atoms;
  atoms.reserve(pairs.size());
  for (const auto& [x, p] : pairs) atoms.push_back({x, p});
  return DiscreteDistribution(std::move(atoms));
}

std::vector<std::pair<double, double>> to_pairs(const DiscreteDistribution& d) {
  std::vector<std::pair<double, double>> out;
  for (const Atom& a : d.atoms()) out.emplace_back(a.x, a.p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Uniform distance between mean-0 variance-1 laws and the standard normal";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_ArithmeticError);

  m.def("normal_pdf", &normal_pdf, py::arg("t"));
  m.def("normal_cdf", &normal_cdf, py::arg("x"));
  m.def("normal_sf", &normal_sf, py::arg("x"));

  py::class_<ExtremalConstants>(m, "ExtremalConstants")
      .def_readonly("x_phi", &ExtremalConstants::x_phi)
      .def_readonly("c_phi", &ExtremalConstants::c_phi)
      .def_readonly("target", &ExtremalConstants::target)
      .def_readonly("solve_tol", &ExtremalConstants::solve_tol)
      .def("__repr__", [](const ExtremalConstants& c) {
        return "ExtremalConstants(x_phi=" + format_real(c.x_phi) + ", c_phi=" + format_real(c.c_phi) + ")";
      });

  m.def("psi", &psi, py::arg("x"));
  m.def("psi_derivative", &psi_derivative, py::arg("x"));
  m.def("u", &u, py::arg("x"));
  m.def(
      "u_log_derivative",
      [](double x, bool raw) {
        return u_log_derivative(x, raw ? LogDerivativeForm::kRaw : LogDerivativeForm::kSimplified);
      },
      py::arg("x"), py::arg("raw") = false);
  m.def("solve_constants", &solve_constants, py::arg("tol") = 1e-12);
  m.def("extremal_constants", &extremal_constants, py::return_value_policy::reference);

  py::class_<MomentSummary>(m, "MomentSummary")
      .def_readonly("mean", &MomentSummary::mean)
      .def_readonly("variance", &MomentSummary::variance)
      .def_readonly("beta", &MomentSummary::beta);

  py::class_<DiscreteDistribution>(m, "DiscreteDistribution")
      .def(py::init(&from_pairs), py::arg("atoms"), "List of (x, p) pairs")
      .def_property_readonly("atoms", &to_pairs)
      .def("cdf_at", &DiscreteDistribution::cdf_at, py::arg("x"))
      .def("cdf_left_limit", &DiscreteDistribution::cdf_left_limit, py::arg("x"))
      .def("mirrored", &DiscreteDistribution::mirrored)
      .def("to_json", [](const DiscreteDistribution& d) { return distribution_to_json(d); })
      .def_static("from_json", [](const std::string& s) { return distribution_from_json(s); })
      .def("__len__", &DiscreteDistribution::size);

  m.def("moments", &moments, py::arg("d"));
  m.def("is_in_V", &is_in_V, py::arg("d"), py::arg("tol") = 1e-9);
  m.def("make_two_point", [](double a) { return make_two_point({a}); }, py::arg("a"));
  m.def("extremal_distribution", &extremal_distribution, py::arg("constants"),
        py::arg("mirrored") = false);
  m.def("standardize", &standardize, py::arg("d"));

  py::enum_<Side>(m, "Side").value("left_limit", Side::kLeftLimit).value("right_value", Side::kRightValue);
  py::enum_<GapSign>(m, "GapSign").value("F_above", GapSign::kFAbove).value("F_below", GapSign::kFBelow);
  py::enum_<Bound>(m, "Bound").value("berry_esseen", Bound::kBerryEsseen).value("uniform", Bound::kUniform);

  py::class_<DistanceReport>(m, "DistanceReport")
      .def_readonly("delta", &DistanceReport::delta)
      .def_readonly("argmax_x", &DistanceReport::argmax_x)
      .def_readonly("side", &DistanceReport::side)
      .def_readonly("gap_sign", &DistanceReport::gap_sign);
  m.def("kolmogorov_distance", &kolmogorov_distance, py::arg("d"));

  py::class_<CantelliReport>(m, "CantelliReport")
      .def_readonly("x_probe", &CantelliReport::x_probe)
      .def_readonly("lower_tail", &CantelliReport::lower_tail)
      .def_readonly("upper_tail", &CantelliReport::upper_tail)
      .def_readonly("bound", &CantelliReport::bound)
      .def_readonly("satisfied", &CantelliReport::satisfied)
      .def_readonly("slack", &CantelliReport::slack);
  m.def("cantelli_check", &cantelli_check, py::arg("d"), py::arg("x"));

  py::class_<ComparisonReport>(m, "ComparisonReport")
      .def_readonly("beta", &ComparisonReport::beta)
      .def_readonly("c1", &ComparisonReport::c1)
      .def_readonly("be_bound", &ComparisonReport::be_bound)
      .def_readonly("uniform_bound", &ComparisonReport::uniform_bound)
      .def_readonly("winner", &ComparisonReport::winner)
      .def_readonly("crossover", &ComparisonReport::crossover);
  m.def("compare_berry_esseen", &compare_berry_esseen, py::arg("d"), py::arg("constants"));

  py::class_<SweepResult>(m, "SweepResult")
      .def_property_readonly("grid",
                             [](const SweepResult& s) {
                               std::vector<std::pair<double, double>> g;
                               for (const SweepPoint& p : s.grid) g.emplace_back(p.a, p.delta);
                               return g;
                             })
      .def_readonly("best_a", &SweepResult::best_a)
      .def_readonly("best_delta", &SweepResult::best_delta)
      .def_readonly("refine_iterations", &SweepResult::refine_iterations);
  m.def("sweep_two_point", &sweep_two_point, py::arg("a_min"), py::arg("a_max"), py::arg("n_grid"),
        py::arg("mirrored") = false);

  py::class_<CampaignSummary>(m, "CampaignSummary")
      .def_readonly("trials", &CampaignSummary::trials)
      .def_property_readonly("violations",
                             [](const CampaignSummary& s) { return s.violations.size(); })
      .def_readonly("max_delta", &CampaignSummary::max_delta)
      .def_readonly("max_delta_distribution_json", &CampaignSummary::max_delta_distribution_json)
      .def_readonly("min_cantelli_slack", &CampaignSummary::min_cantelli_slack);
  m.def(
      "random_V_campaign",
      [](int n_trials, int max_atoms, std::uint64_t seed, bool biased) {
        return random_V_campaign(n_trials, max_atoms, seed,
                                 biased ? Sampler::kNearExtremal : Sampler::kUniform);
      },
      py::arg("n_trials"), py::arg("max_atoms") = 12, py::arg("seed") = 42, py::arg("biased") = false);

  m.def(
      "dump_curves",
      [](double lo, double hi, double step) {
        const CurveDump dump = dump_curves(lo, hi, step);
        py::dict out;
        out["x"] = dump.x;
        for (const CurveSeries& s : dump.series) out[py::str(s.name)] = s.y;
        return out;
      },
      py::arg("range_min"), py::arg("range_max"), py::arg("step"));
}
