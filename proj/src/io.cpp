#include "coamoeba/io.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace coamoeba {

using nlohmann::json;

std::string format_angle(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const PointCloud& cloud) {
  for (int i = 0; i < cloud.rank; ++i) {
    if (i) os << ',';
    os << "theta_" << (i + 1);
  }
  os << '\n';
  for (const auto& p : cloud.points) {
    for (int i = 0; i < cloud.rank; ++i) {
      if (i) os << ',';
      os << format_angle(p.angles[i]);
    }
    os << '\n';
  }
}

void write_ply(std::ostream& os, const PointCloud& cloud) {
  if (cloud.rank != 3) throw std::invalid_argument("PLY export requires rank 3 clouds");
  os << "ply\nformat ascii 1.0\n";
  os << "comment " << cloud.provenance << '\n';
  os << "element vertex " << cloud.points.size() << '\n';
  os << "property double x\nproperty double y\nproperty double z\n";
  os << "end_header\n";
  for (const auto& p : cloud.points)
    os << format_angle(p.angles[0]) << ' ' << format_angle(p.angles[1]) << ' '
       << format_angle(p.angles[2]) << '\n';
}

json to_json(const Cone& c) {
  return json{{"rank", c.rank}, {"rays", c.rays}, {"lineality", c.lineality},
              {"dimension", c.dimension()}};
}

json to_json(const NormalFan& fan) {
  json cones = json::array();
  for (const auto& fc : fan.cones) {
    json entry = to_json(fc.cone);
    entry["face"] = fc.face;
    cones.push_back(std::move(entry));
  }
  return json{{"rank", fan.polytope.rank},
              {"vertices", fan.polytope.vertices},
              {"cones", std::move(cones)}};
}

json to_json(const CodualHyperplane& h) {
  return json{{"rank", h.rank}, {"normal", h.normal}, {"offsets", h.offsets}};
}

json to_json(const PhaseLimitLine& line) {
  return json{{"free_index", line.free_index}, {"fixed_angles", line.fixed_angles}};
}

json to_json(const CoamoebaSegment& seg) {
  return json{{"direction_index", seg.direction_index},
              {"fixed_angles", seg.fixed_angles},
              {"interval", {seg.interval_begin, seg.interval_end}},
              {"interval_mid", seg.interval_mid},
              {"circle_index", seg.circle_index},
              {"arc_index", seg.arc_index}};
}

json to_json(const PhaseLimitReport& report, const std::vector<std::string>& vars) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json families = json::array();
    for (const auto& fam : e.families) {
      json f = to_json(fam.hyperplane);
      f["multiplicity"] = fam.multiplicity;
      families.push_back(std::move(f));
    }
    json cone = to_json(e.cone.cone);
    cone["face"] = e.cone.face;
    entries.push_back(json{{"cone", std::move(cone)},
                           {"initial_form", print(e.initial, vars)},
                           {"closed_form", e.closed_form},
                           {"codual_families", std::move(families)}});
  }
  return json{{"polynomial", print(report.f, vars)}, {"entries", std::move(entries)}};
}

std::string report_to_text(const PhaseLimitReport& report,
                           const std::vector<std::string>& vars) {
  std::ostringstream os;
  os << "phase limit summary for " << print(report.f, vars) << '\n';
  os << "weight cones with non-monomial initial form: " << report.entries.size() << '\n';
  for (const auto& e : report.entries) {
    os << "- cone rays";
    for (const auto& r : e.cone.cone.rays) {
      os << " (";
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << ")";
    }
    for (const auto& l : e.cone.cone.lineality) {
      os << " line(";
      for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
      os << ")";
    }
    os << ": initial form " << print(e.initial, vars);
    if (e.closed_form) {
      os << "; codual families:";
      for (const auto& fam : e.families) {
        os << " normal (";
        for (std::size_t i = 0; i < fam.hyperplane.normal.size(); ++i)
          os << (i ? "," : "") << fam.hyperplane.normal[i];
        os << ") offsets";
        for (double off : fam.hyperplane.offsets) os << ' ' << format_angle(off);
        if (fam.multiplicity > 1) os << " x" << fam.multiplicity;
        os << ';';
      }
    } else {
      os << "; no closed form (sampled geometry only)";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace coamoeba
