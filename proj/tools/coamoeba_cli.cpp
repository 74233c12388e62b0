#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coamoeba/coamoeba.hpp"
#include "coamoeba/io.hpp"
#include "coamoeba/laurent.hpp"
#include "coamoeba/lines3d.hpp"
#include "coamoeba/phase_limit.hpp"
#include "coamoeba/polytope.hpp"

namespace {

using namespace coamoeba;

constexpr double kRadToDeg = 57.29577951308232;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Complex literal a+bi with optional parts: "1.5", "-i", "2i", "1-0.5i".
Complex parse_complex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  const char* begin = text.c_str();
  const char* end = begin + text.size();
  auto unit_imag = [&](const char* p, double& out) {
    // Matches [+-]?i at p through end.
    double sign = 1.0;
    if (*p == '+' || *p == '-') {
      if (*p == '-') sign = -1.0;
      ++p;
    }
    if (p + 1 == end && *p == 'i') {
      out = sign;
      return true;
    }
    return false;
  };
  double imag_unit;
  if (unit_imag(begin, imag_unit)) return Complex(0.0, imag_unit);

  char* p = nullptr;
  double first = std::strtod(begin, &p);
  if (p == begin) throw std::invalid_argument("malformed complex literal '" + text + "'");
  if (p == end) return Complex(first, 0.0);
  if (*p == 'i' && p + 1 == end) return Complex(0.0, first);
  if (*p != '+' && *p != '-')
    throw std::invalid_argument("malformed complex literal '" + text + "'");
  if (unit_imag(p, imag_unit)) return Complex(first, imag_unit);
  char* q = nullptr;
  double second = std::strtod(p, &q);
  if (q == p || q + 1 != end || *q != 'i')
    throw std::invalid_argument("malformed complex literal '" + text + "'");
  return Complex(first, second);
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_complex(part));
  return out;
}

std::array<RootP1, 4> parse_roots(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 4) throw std::invalid_argument("expected four comma-separated roots");
  std::array<RootP1, 4> roots;
  for (int i = 0; i < 4; ++i)
    roots[i] = (parts[i] == "inf") ? RootP1::inf() : RootP1::at(parse_complex(parts[i]));
  return roots;
}

WeightVector parse_weight(const std::string& text) {
  WeightVector w;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    w.push_back(std::stoll(part, &used));
    if (used != part.size()) throw std::invalid_argument("malformed weight entry '" + part + "'");
  }
  return w;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(part, &used));
    if (used != part.size()) throw std::invalid_argument("malformed number '" + part + "'");
  }
  return out;
}

void apply_degrees(PointCloud& cloud) {
  for (auto& p : cloud.points)
    for (double& a : p.angles) a *= kRadToDeg;
}

void write_cloud(const std::string& path, const std::string& format, PointCloud cloud,
                 bool degrees) {
  if (degrees) apply_degrees(cloud);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output path " + path);
    os = &file;
  }
  if (format == "csv")
    write_csv(*os, cloud);
  else if (format == "ply")
    write_ply(*os, cloud);
  else
    throw std::invalid_argument("unknown format " + format);
}

struct SchemeOptions {
  CurveSamplingScheme scheme;
  void attach(CLI::App* cmd) {
    cmd->add_option("--r-min", scheme.r_min, "smallest sample modulus");
    cmd->add_option("--r-max", scheme.r_max, "largest sample modulus");
    cmd->add_option("--shells", scheme.shells, "number of log-radial shells");
    cmd->add_option("--angles", scheme.angles, "angular samples per shell");
    cmd->add_option("--angle-offset", scheme.angle_offset,
                    "angular grid offset in step units (0.5 = cell-centered)");
  }
};

int dispatch(CLI::App& app, int argc, char** argv) {
  std::string poly_text, vars_text = "x,y", weight_text, output = "-", format = "csv";
  std::string line_text, point_text, roots_text, t_text = "0.1,0.01,0.001";
  std::string half_text = "both", report_format = "text";
  bool degrees = false;
  int seed = 0;
  std::size_t samples = 100000;
  double epsilon = 1e-3;
  int points_per_piece = 200;
  SchemeOptions sc, dg;

  auto* sample = app.add_subcommand("sample-curve", "sample the coamoeba of a plane curve");
  sample->add_option("--poly", poly_text, "Laurent polynomial")->required();
  sample->add_option("--vars", vars_text, "comma-separated variable names");
  sc.attach(sample);
  sample->add_option("--seed", seed, "accepted for compatibility; sampling is deterministic");
  sample->add_option("--output", output, "output path or - for stdout");
  sample->add_option("--format", format, "csv|ply");
  sample->add_flag("--degrees", degrees, "print angles in degrees");

  double snap_tol = 1e-6;
  auto* membership = app.add_subcommand("membership", "two-triangle membership for a T^2 line");
  membership->add_option("--line", line_text, "coefficients a,b,c")->required();
  membership->add_option("--point", point_text, "angles alpha,beta in radians")->required();
  membership->add_option("--tol", snap_tol, "vertex/boundary snapping tolerance");

  auto* initial = app.add_subcommand("initial", "initial form of a polynomial");
  initial->add_option("--poly", poly_text, "Laurent polynomial")->required();
  initial->add_option("--vars", vars_text, "comma-separated variable names");
  initial->add_option("--weight", weight_text, "integer weight vector")->required();

  auto* fan = app.add_subcommand("fan", "normal fan of the Newton polytope");
  fan->add_option("--poly", poly_text, "Laurent polynomial")->required();
  fan->add_option("--vars", vars_text, "comma-separated variable names");

  auto* limits = app.add_subcommand("limits", "phase limit summary");
  limits->add_option("--poly", poly_text, "Laurent polynomial")->required();
  limits->add_option("--vars", vars_text, "comma-separated variable names");
  limits->add_option("--format", report_format, "text|json-report");

  auto* degen = app.add_subcommand("degenerate", "toric degeneration fibers");
  degen->add_option("--poly", poly_text, "Laurent polynomial")->required();
  degen->add_option("--vars", vars_text, "comma-separated variable names");
  degen->add_option("--weight", weight_text, "integer weight vector")->required();
  degen->add_option("--t", t_text, "comma-separated positive t values");
  dg.attach(degen);
  degen->add_option("--seed", seed, "accepted for compatibility; sampling is deterministic");
  degen->add_option("--output", output, "output prefix, or - to stream all fibers");
  degen->add_flag("--degrees", degrees, "print angles in degrees");

  auto* line3 = app.add_subcommand("line3", "lines in P^3");
  line3->require_subcommand(1);
  auto* l3_sample = line3->add_subcommand("sample", "membrane point cloud");
  l3_sample->add_option("--roots", roots_text, "four roots, e.g. inf,-0.5,0,1.5")->required();
  l3_sample->add_option("--samples", samples, "target sample count");
  l3_sample->add_option("--half", half_text, "upper|lower|both");
  l3_sample->add_option("--seed", seed, "accepted for compatibility; sampling is deterministic");
  l3_sample->add_option("--output", output, "output path or - for stdout");
  l3_sample->add_option("--format", format, "csv|ply");
  l3_sample->add_flag("--degrees", degrees, "print angles in degrees");
  auto* l3_classify = line3->add_subcommand("classify", "root-configuration class");
  l3_classify->add_option("--roots", roots_text)->required();
  auto* l3_limits = line3->add_subcommand("limits", "phase limit lines and intersections");
  l3_limits->add_option("--roots", roots_text)->required();
  auto* l3_segments = line3->add_subcommand("segments", "the 12 coamoeba segments");
  l3_segments->add_option("--roots", roots_text)->required();
  auto* l3_contour = line3->add_subcommand("contour", "contour image of a real line");
  l3_contour->add_option("--roots", roots_text)->required();
  l3_contour->add_option("--epsilon", epsilon, "contour radius parameter");
  l3_contour->add_option("--points", points_per_piece, "samples per contour piece");
  l3_contour->add_option("--output", output, "output path or - for stdout");
  l3_contour->add_option("--format", format, "csv|ply");
  l3_contour->add_flag("--degrees", degrees, "print angles in degrees");
  auto* l3_rank = line3->add_subcommand("rank", "numerical rank of the argument differential");
  l3_rank->add_option("--roots", roots_text)->required();
  l3_rank->add_option("--point", point_text, "complex evaluation point")->required();

  app.require_subcommand(1);
  app.parse(argc, argv);

  auto vars = split(vars_text, ',');
  (void)seed;

  if (sample->parsed()) {
    LaurentPolynomial f = parse(poly_text, vars);
    CurveSampleStats stats;
    PointCloud cloud = sample_plane_curve(f, sc.scheme, &stats);
    write_cloud(output, format, std::move(cloud), degrees);
    std::cerr << "degenerate_samples=" << stats.degenerate_samples
              << " solver_failures=" << stats.solver_failures << '\n';
    return 0;
  }
  if (membership->parsed()) {
    auto coeffs = parse_complex_list(line_text);
    auto angles = parse_reals(point_text);
    if (coeffs.size() != 3) throw std::invalid_argument("--line needs three coefficients");
    if (angles.size() != 2) throw std::invalid_argument("--point needs two angles");
    LineT2 line{coeffs[0], coeffs[1], coeffs[2]};
    TorusPoint p;
    p.angles = {canonical_angle(angles[0]), canonical_angle(angles[1])};
    std::cout << to_string(line2_membership(line, p, snap_tol)) << '\n';
    return 0;
  }
  if (initial->parsed()) {
    LaurentPolynomial f = parse(poly_text, vars);
    std::cout << print(initial_form(f, parse_weight(weight_text)), vars) << '\n';
    return 0;
  }
  if (fan->parsed()) {
    LaurentPolynomial f = parse(poly_text, vars);
    NormalFan nf = normal_fan(newton_polytope(f));
    nlohmann::json out = to_json(nf);
    nlohmann::json dirs = nlohmann::json::array();
    for (const auto& c : logarithmic_limit_directions(f)) dirs.push_back(to_json(c));
    out["limit_directions"] = std::move(dirs);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (limits->parsed()) {
    LaurentPolynomial f = parse(poly_text, vars);
    PhaseLimitReport report = phase_limit_summary(f);
    if (report_format == "json-report")
      std::cout << to_json(report, vars).dump(2) << '\n';
    else
      std::cout << report_to_text(report, vars);
    return 0;
  }
  if (degen->parsed()) {
    LaurentPolynomial f = parse(poly_text, vars);
    auto ts = parse_reals(t_text);
    auto clouds = degenerate(f, parse_weight(weight_text), ts, dg.scheme);
    for (std::size_t k = 0; k < clouds.size(); ++k) {
      if (output == "-") {
        write_cloud("-", "csv", clouds[k], degrees);
        if (k + 1 < clouds.size()) std::cout << '\n';
      } else {
        write_cloud(output + "-" + std::to_string(k + 1) + ".csv", "csv", clouds[k], degrees);
      }
    }
    return 0;
  }
  if (line3->parsed()) {
    LineInP3 line = line_from_roots(parse_roots(roots_text));
    if (l3_sample->parsed()) {
      HalfPlane half = HalfPlane::both;
      if (half_text == "upper")
        half = HalfPlane::upper;
      else if (half_text == "lower")
        half = HalfPlane::lower;
      else if (half_text != "both")
        throw std::invalid_argument("--half must be upper, lower or both");
      write_cloud(output, format, sample_membrane(line, samples, half), degrees);
    } else if (l3_classify->parsed()) {
      std::cout << to_string(classify(line)) << '\n';
    } else if (l3_limits->parsed()) {
      auto lines = phase_limit_lines(line);
      nlohmann::json out;
      out["lines"] = nlohmann::json::array();
      for (const auto& h : lines) out["lines"].push_back(to_json(h));
      out["intersecting_pairs"] = lines_intersect(lines);
      std::cout << out.dump(2) << '\n';
    } else if (l3_segments->parsed()) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& seg : coamoeba_segments(line)) out.push_back(to_json(seg));
      std::cout << out.dump(2) << '\n';
    } else if (l3_contour->parsed()) {
      auto pieces = contour_image(line, epsilon, points_per_piece);
      PointCloud merged;
      merged.rank = 3;
      merged.provenance = "contour image";
      for (const auto& piece : pieces) {
        std::cerr << piece.name << " points=" << piece.cloud.points.size() << '\n';
        merged.points.insert(merged.points.end(), piece.cloud.points.begin(),
                             piece.cloud.points.end());
      }
      write_cloud(output, format, std::move(merged), degrees);
    } else if (l3_rank->parsed()) {
      std::cout << differential_rank(line, parse_complex(point_text)) << '\n';
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coamoeba and phase limit set toolkit"};
  try {
    return dispatch(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const coamoeba::SolverError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
