#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxdim/covering.hpp"
#include "boxdim/dimension.hpp"
#include "boxdim/point_set.hpp"

namespace boxdim {

/// JSON number rounded to 6 significant digits; all emitted floating values
/// go through here so reports are byte-stable.
nlohmann::ordered_json json_real(double x);

/// Reads a point set from a file: a JSON array of "p/q" strings, or CSV with
/// one value per line. Chosen by the first non-space byte ('[' means JSON).
PointSet load_point_set(const std::string& path);

/// Mirrors the ingestion format: array of canonical "p/q" strings.
nlohmann::ordered_json point_set_to_json(const PointSet& s);

/// Generator specifiers: reciprocal:m, primepow:p:K, smooth:p1,p2,...:m,
/// cantor:depth, file:PATH.
PointSet resolve_set_spec(const std::string& spec);

/// Schedule specifiers: geo:<delta0>:<ratio>:<steps> or pow3:<steps>.
ScaleSchedule parse_scales(const std::string& spec);

/// Comma-separated prime list, e.g. "2,3,5". Each entry is validated.
std::vector<std::uint64_t> parse_primes(const std::string& text);

std::uint64_t parse_uint(const std::string& text, const char* what);

nlohmann::ordered_json cover_to_json(const std::string& set_label, const IntervalCover& cover);

nlohmann::ordered_json dimension_to_json(const std::string& set_label,
                                         const std::string& schedule_spec,
                                         const CountCurve& curve, const DimensionReport& report);

}  // namespace boxdim
