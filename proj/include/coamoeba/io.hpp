#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "coamoeba/coamoeba.hpp"
#include "coamoeba/lines3d.hpp"
#include "coamoeba/phase_limit.hpp"
#include "coamoeba/polytope.hpp"

namespace coamoeba {

// Shortest-round-trip decimal form of a double (up to 17 significant digits).
std::string format_angle(double value);

// CSV with header theta_1,...,theta_n, one row per point.
void write_csv(std::ostream& os, const PointCloud& cloud);

// ASCII PLY, vertices only; rank 3 clouds.
void write_ply(std::ostream& os, const PointCloud& cloud);

nlohmann::json to_json(const Cone& c);
nlohmann::json to_json(const NormalFan& fan);
nlohmann::json to_json(const CodualHyperplane& h);
nlohmann::json to_json(const PhaseLimitLine& line);
nlohmann::json to_json(const CoamoebaSegment& seg);
nlohmann::json to_json(const PhaseLimitReport& report, const std::vector<std::string>& vars);

std::string report_to_text(const PhaseLimitReport& report, const std::vector<std::string>& vars);

}  // namespace coamoeba
