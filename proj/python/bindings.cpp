#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "kappachain/chain_model.hpp"
#include "kappachain/errors.hpp"
#include "kappachain/geom_kernel.hpp"
#include "kappachain/lemma_lab.hpp"
#include "kappachain/triangulate.hpp"
#include "kappachain/verify_harness.hpp"

namespace py = pybind11;
using namespace kappachain;

namespace {

py::dict report_dict(const TheoremReport& r) {
  py::dict quantities;
  for (const Quantity& q : r.quantities) quantities[py::str(q.name)] = q.value;
  py::dict d;
  d["theorem_id"] = std::string(to_string(r.theorem));
  d["seed"] = r.instance_seed;
  d["margin"] = r.margin;
  d["verdict"] = r.pass ? "pass" : "fail";
  d["quantities"] = quantities;
  return d;
}

ConvexChain make_chain(std::vector<double> lengths, std::vector<double> angles) {
  return {std::move(lengths), std::move(angles)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Constant-curvature chain geometry: trigonometry, arm opening, redraw checks";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<EmbeddabilityError>(m, "EmbeddabilityError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<GeneratorError>(m, "GeneratorError", PyExc_RuntimeError);

  m.def(
      "solve_sss",
      [](double a, double b, double c, double kappa) {
        return solve_sss(Triangle(a, b, c, Curvature(kappa)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("kappa"),
      "Angles (alpha, beta, gamma) opposite sides (a, b, c).");
  m.def(
      "solve_sas",
      [](double b, double c, double alpha, double kappa) {
        return solve_sas(b, c, alpha, Curvature(kappa));
      },
      py::arg("b"), py::arg("c"), py::arg("alpha"), py::arg("kappa"));
  m.def(
      "spherical_excess",
      [](double a, double b, double c, double kappa) {
        return spherical_excess(Triangle(a, b, c, Curvature(kappa)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("kappa"));

  m.def(
      "endpoint_distance",
      [](std::vector<double> lengths, std::vector<double> angles, double kappa) {
        return endpoint_distance(make_chain(std::move(lengths), std::move(angles)), Curvature(kappa));
      },
      py::arg("lengths"), py::arg("angles"), py::arg("kappa"));
  m.def(
      "is_convex",
      [](std::vector<double> lengths, std::vector<double> angles, double kappa) {
        return is_convex(make_chain(std::move(lengths), std::move(angles)), Curvature(kappa));
      },
      py::arg("lengths"), py::arg("angles"), py::arg("kappa"));
  m.def(
      "open_arm",
      [](std::vector<double> lengths, std::vector<double> angles, std::vector<double> increments) {
        const ConvexChain out = open_arm(make_chain(std::move(lengths), std::move(angles)), increments);
        return py::make_tuple(std::vector<double>(out.edge_lengths().begin(), out.edge_lengths().end()),
                              std::vector<double>(out.interior_angles().begin(),
                                                  out.interior_angles().end()));
      },
      py::arg("lengths"), py::arg("angles"), py::arg("increments"),
      "Returns (lengths, angles) of the opened chain.");

  m.def(
      "midchord_length",
      [](double a, double b, double c, double kappa) {
        return midchord_length(Triangle(a, b, c, Curvature(kappa)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("kappa"));
  m.def(
      "iterated_midchord",
      [](double a, double b, double c, double kappa, int iters) {
        const MidchordSequence seq = iterated_midchord(Triangle(a, b, c, Curvature(kappa)), iters);
        py::list steps;
        for (const MidchordStep& s : seq.steps) {
          py::dict d;
          d["level"] = s.level;
          d["chord"] = s.chord;
          d["scaled_gain"] = s.scaled_gain;
          d["angle_estimate"] = s.angle_estimate;
          steps.append(d);
        }
        return py::make_tuple(steps, seq.truncated);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("kappa"), py::arg("iters"));
  m.def(
      "legendre_planar_angles",
      [](double a, double b, double c, double kappa) {
        const LegendreApproximation l = legendre_planar_angles(Triangle(a, b, c, Curvature(kappa)));
        py::dict d;
        d["curved"] = l.curved;
        d["excess"] = l.excess;
        d["approx"] = l.approx;
        d["planar"] = l.planar;
        d["residuals"] = l.residuals;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("kappa"));
  m.def(
      "legendre_order_fit",
      [](double a, double b, double c, double kappa, std::vector<double> scales) {
        const OrderFit f = legendre_order_fit(Triangle(a, b, c, Curvature(kappa)), scales);
        return py::make_tuple(f.slope, f.inconclusive);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("kappa"), py::arg("scales"),
      "Returns (slope, inconclusive).");
  m.def(
      "compare_angles_two_spheres",
      [](std::array<double, 3> sides, double kappa_hi, double kappa_lo) {
        const AngleComparison c =
            compare_angles_two_spheres(sides, Curvature(kappa_hi), Curvature(kappa_lo));
        py::dict d;
        d["source_angles"] = c.source_angles;
        d["target_angles"] = c.target_angles;
        d["deltas"] = c.deltas;
        d["excess_pair"] = c.excess_pair;
        return d;
      },
      py::arg("sides"), py::arg("kappa_hi"), py::arg("kappa_lo"));

  m.def(
      "check_sphere_to_plane",
      [](std::vector<double> lengths, std::vector<double> angles, double kappa) {
        return report_dict(
            check_sphere_to_plane(make_chain(std::move(lengths), std::move(angles)), Curvature(kappa)));
      },
      py::arg("lengths"), py::arg("angles"), py::arg("kappa"));
  m.def(
      "check_growing_sphere",
      [](std::vector<double> lengths, std::vector<double> angles, double kappa, double kappa_prime) {
        return report_dict(check_growing_sphere(make_chain(std::move(lengths), std::move(angles)),
                                                Curvature(kappa), Curvature(kappa_prime)));
      },
      py::arg("lengths"), py::arg("angles"), py::arg("kappa"), py::arg("kappa_prime"));
  m.def(
      "sweep_radius",
      [](std::vector<double> lengths, std::vector<double> angles, std::vector<double> grid) {
        py::list out;
        for (const SweepPoint& p : sweep_radius(make_chain(std::move(lengths), std::move(angles)), grid)) {
          out.append(py::make_tuple(p.kappa, p.distance ? py::cast(*p.distance) : py::none()));
        }
        return out;
      },
      py::arg("lengths"), py::arg("angles"), py::arg("grid"),
      "List of (kappa, distance or None).");
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, int count) {
        const auto suite = parse_suite(name);
        if (!suite) throw DomainError("unknown suite '" + name + "'");
        SuiteOptions opts;
        opts.seed = seed;
        opts.count = count;
        std::vector<TheoremReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(*suite, opts);
        }
        py::list out;
        for (const TheoremReport& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("suite"), py::arg("seed") = 1, py::arg("count") = 100);

#ifdef KAPPACHAIN_VERSION
  m.attr("__version__") = KAPPACHAIN_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
