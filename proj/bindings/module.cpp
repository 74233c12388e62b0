#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "coamoeba/io.hpp"
#include "coamoeba/laurent.hpp"
#include "coamoeba/lines3d.hpp"
#include "coamoeba/phase_limit.hpp"
#include "coamoeba/polytope.hpp"

namespace py = pybind11;
using namespace coamoeba;

namespace {

using PyRoots = std::vector<std::optional<Complex>>;

std::array<RootP1, 4> to_roots(const PyRoots& roots) {
  if (roots.size() != 4) throw std::invalid_argument("expected exactly 4 roots");
  std::array<RootP1, 4> out;
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = roots[i] ? RootP1::at(*roots[i]) : RootP1::inf();
  return out;
}

std::vector<std::vector<double>> to_rows(const PointCloud& cloud) {
  std::vector<std::vector<double>> rows;
  rows.reserve(cloud.points.size());
  for (const auto& p : cloud.points) rows.push_back(p.angles);
  return rows;
}

CurveSamplingScheme make_scheme(double r_min, double r_max, int shells, int angles,
                                double angle_offset) {
  CurveSamplingScheme s;
  s.r_min = r_min;
  s.r_max = r_max;
  s.shells = shells;
  s.angles = angles;
  s.angle_offset = angle_offset;
  return s;
}

HalfPlane parse_half(const std::string& half) {
  if (half == "upper") return HalfPlane::upper;
  if (half == "lower") return HalfPlane::lower;
  if (half == "both") return HalfPlane::both;
  throw std::invalid_argument("half must be upper, lower or both");
}

}  // namespace

PYBIND11_MODULE(_coamoeba, m) {
  m.doc() = "coamoebae and phase limit sets of subvarieties of complex tori";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  m.def(
      "initial_form",
      [](const std::string& poly, const std::vector<std::string>& vars,
         const WeightVector& w) { return print(initial_form(parse(poly, vars), w), vars); },
      py::arg("poly"), py::arg("vars"), py::arg("weight"));

  m.def(
      "evaluate",
      [](const std::string& poly, const std::vector<std::string>& vars,
         const TorusElement& x) { return evaluate(parse(poly, vars), x); },
      py::arg("poly"), py::arg("vars"), py::arg("point"));

  m.def(
      "weight_value",
      [](const std::string& poly, const std::vector<std::string>& vars,
         const WeightVector& w) { return weight_value(parse(poly, vars), w); },
      py::arg("poly"), py::arg("vars"), py::arg("weight"));

  m.def(
      "deform",
      [](const std::string& poly, const std::vector<std::string>& vars, const WeightVector& w,
         double t) { return print(deform(parse(poly, vars), w, t), vars); },
      py::arg("poly"), py::arg("vars"), py::arg("weight"), py::arg("t"));

  m.def(
      "newton_vertices",
      [](const std::string& poly, const std::vector<std::string>& vars) {
        return newton_polytope(parse(poly, vars)).vertices;
      },
      py::arg("poly"), py::arg("vars"));

  m.def(
      "limit_directions",
      [](const std::string& poly, const std::vector<std::string>& vars) {
        std::vector<LatticeVector> rays;
        for (const auto& c : logarithmic_limit_directions(parse(poly, vars)))
          if (c.rays.size() == 1) rays.push_back(c.rays[0]);
        return rays;
      },
      py::arg("poly"), py::arg("vars"));

  m.def(
      "sample_curve",
      [](const std::string& poly, const std::vector<std::string>& vars, double r_min,
         double r_max, int shells, int angles, double angle_offset) {
        return to_rows(sample_plane_curve(
            parse(poly, vars), make_scheme(r_min, r_max, shells, angles, angle_offset)));
      },
      py::arg("poly"), py::arg("vars"), py::arg("r_min") = 1e-3, py::arg("r_max") = 1e3,
      py::arg("shells") = 48, py::arg("angles") = 256, py::arg("angle_offset") = 0.0);

  m.def(
      "line2_membership",
      [](Complex a, Complex b, Complex c, const std::vector<double>& point, double tol) {
        TorusPoint p;
        p.angles = point;
        return std::string(to_string(line2_membership(LineT2{a, b, c}, p, tol)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("point"), py::arg("tol") = 1e-12);

  m.def("solve_univariate", &solve_univariate, py::arg("coefficients"));

  m.def(
      "phase_limit_summary_json",
      [](const std::string& poly, const std::vector<std::string>& vars) {
        return to_json(phase_limit_summary(parse(poly, vars)), vars).dump();
      },
      py::arg("poly"), py::arg("vars"));

  m.def(
      "degenerate",
      [](const std::string& poly, const std::vector<std::string>& vars, const WeightVector& w,
         const std::vector<double>& ts, double r_min, double r_max, int shells, int angles,
         double angle_offset) {
        std::vector<std::vector<std::vector<double>>> out;
        for (const auto& cloud :
             degenerate(parse(poly, vars), w, ts,
                        make_scheme(r_min, r_max, shells, angles, angle_offset)))
          out.push_back(to_rows(cloud));
        return out;
      },
      py::arg("poly"), py::arg("vars"), py::arg("weight"), py::arg("t_sequence"),
      py::arg("r_min") = 1e-3, py::arg("r_max") = 1e3, py::arg("shells") = 48,
      py::arg("angles") = 256, py::arg("angle_offset") = 0.0);

  m.def(
      "classify_line",
      [](const PyRoots& roots) {
        return std::string(to_string(classify(line_from_roots(to_roots(roots)))));
      },
      py::arg("roots"));

  m.def(
      "is_cocircular",
      [](const PyRoots& roots) { return is_cocircular(line_from_roots(to_roots(roots)).roots); },
      py::arg("roots"));

  m.def(
      "phase_limit_lines_json",
      [](const PyRoots& roots) {
        auto lines = phase_limit_lines(line_from_roots(to_roots(roots)));
        nlohmann::json j = nlohmann::json::array();
        for (const auto& line : lines) j.push_back(to_json(line));
        return j.dump();
      },
      py::arg("roots"));

  m.def(
      "segments_json",
      [](const PyRoots& roots) {
        auto segs = coamoeba_segments(line_from_roots(to_roots(roots)));
        nlohmann::json j = nlohmann::json::array();
        for (const auto& seg : segs) j.push_back(to_json(seg));
        return j.dump();
      },
      py::arg("roots"));

  m.def(
      "sample_membrane",
      [](const PyRoots& roots, std::size_t samples, const std::string& half) {
        return to_rows(
            sample_membrane(line_from_roots(to_roots(roots)), samples, parse_half(half)));
      },
      py::arg("roots"), py::arg("samples") = 100000, py::arg("half") = "both");

  m.def(
      "contour",
      [](const PyRoots& roots, double epsilon, int points_per_piece) {
        std::vector<std::pair<std::string, std::vector<std::vector<double>>>> out;
        for (const auto& piece :
             contour_image(line_from_roots(to_roots(roots)), epsilon, points_per_piece))
          out.emplace_back(piece.name, to_rows(piece.cloud));
        return out;
      },
      py::arg("roots"), py::arg("epsilon") = 1e-3, py::arg("points_per_piece") = 100);

  m.def(
      "differential_rank",
      [](const PyRoots& roots, Complex x) {
        return differential_rank(line_from_roots(to_roots(roots)), x);
      },
      py::arg("roots"), py::arg("x"));
}
