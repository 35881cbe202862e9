#include "boxdim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "boxdim/errors.hpp"
#include "boxdim/generators.hpp"

namespace boxdim {

using nlohmann::ordered_json;

ordered_json json_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return ordered_json::parse(buf);
}

std::uint64_t parse_uint(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(std::string(what) + ": expected a nonnegative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw InputError(std::string(what) + ": integer out of range: '" + text + "'");
  }
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t p = parse_uint(item, "prime list");
    if (!is_prime(p)) {
      throw InputError("prime list: " + std::to_string(p) + " is not prime");
    }
    primes.push_back(p);
  }
  if (primes.empty()) throw InputError("prime list: no entries");
  return primes;
}

PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open set file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("set file is empty: " + path);

  std::vector<Rational> values;
  if (text[first] == '[') {
    ordered_json parsed;
    try {
      parsed = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
      throw InputError("set file " + path + ": " + e.what());
    }
    if (!parsed.is_array()) throw InputError("set file " + path + ": expected a JSON array");
    for (const auto& item : parsed) {
      if (!item.is_string()) {
        throw InputError("set file " + path + ": array entries must be \"p/q\" strings");
      }
      values.push_back(Rational::parse(item.get<std::string>()));
    }
  } else {
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      values.push_back(Rational::parse(line));
    }
  }
  return PointSet::from_values(std::move(values), "file:" + path);
}

ordered_json point_set_to_json(const PointSet& s) {
  ordered_json arr = ordered_json::array();
  for (const Rational& x : s.points()) arr.push_back(x.str());
  return arr;
}

PointSet resolve_set_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw InputError("set spec '" + spec +
                     "': expected reciprocal:m, primepow:p:K, smooth:p,..:m, cantor:d or file:PATH");
  }
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "file") {
    return load_point_set(rest);
  }
  if (kind == "reciprocal") {
    return reciprocal_integers(parse_uint(rest, "reciprocal spec"));
  }
  if (kind == "primepow") {
    auto sep = rest.find(':');
    if (sep == std::string::npos) throw InputError("primepow spec needs p:K, got '" + rest + "'");
    std::uint64_t p = parse_uint(rest.substr(0, sep), "primepow base");
    std::uint64_t k = parse_uint(rest.substr(sep + 1), "primepow exponent cap");
    if (k > 4096) throw InputError("primepow spec: exponent cap too large");
    return prime_power_reciprocals(p, static_cast<unsigned>(k));
  }
  if (kind == "smooth") {
    auto sep = rest.rfind(':');
    if (sep == std::string::npos) throw InputError("smooth spec needs p1,p2,..:m, got '" + rest + "'");
    auto primes = parse_primes(rest.substr(0, sep));
    std::uint64_t m = parse_uint(rest.substr(sep + 1), "smooth truncation");
    return smooth_reciprocals(primes, m);
  }
  if (kind == "cantor") {
    std::uint64_t depth = parse_uint(rest, "cantor depth");
    return cantor_endpoints(static_cast<unsigned>(depth));
  }
  throw InputError("unknown set spec kind '" + kind + "'");
}

ScaleSchedule parse_scales(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw InputError("scale spec '" + spec + "': expected geo:<d0>:<ratio>:<steps> or pow3:<steps>");
  }
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "pow3") {
    return ScaleSchedule::powers_of_three(static_cast<unsigned>(parse_uint(rest, "pow3 steps")));
  }
  if (kind == "geo") {
    auto first = rest.find(':');
    auto second = rest.rfind(':');
    if (first == std::string::npos || second == first) {
      throw InputError("geo spec needs <d0>:<ratio>:<steps>, got '" + rest + "'");
    }
    Rational delta0 = Rational::parse(rest.substr(0, first));
    Rational ratio = Rational::parse(rest.substr(first + 1, second - first - 1));
    std::uint64_t steps = parse_uint(rest.substr(second + 1), "geo steps");
    if (steps > 512) throw InputError("geo spec: too many steps");
    return ScaleSchedule::geometric(delta0, ratio, static_cast<unsigned>(steps));
  }
  throw InputError("unknown scale spec kind '" + kind + "'");
}

ordered_json cover_to_json(const std::string& set_label, const IntervalCover& cover) {
  ordered_json intervals = ordered_json::array();
  for (const Rational& left : cover.lefts) {
    intervals.push_back(ordered_json{{"left", left.str()}});
  }
  return ordered_json{{"set", set_label},
                      {"delta", cover.delta.str()},
                      {"intervals", intervals},
                      {"count", cover.count()}};
}

ordered_json dimension_to_json(const std::string& set_label, const std::string& schedule_spec,
                               const CountCurve& curve, const DimensionReport& report) {
  ordered_json samples = ordered_json::array();
  for (const auto& [delta, count] : curve.samples) {
    samples.push_back(ordered_json::array({delta.str(), count}));
  }
  return ordered_json{{"set", set_label},
                      {"scales", schedule_spec},
                      {"slope", json_real(report.slope)},
                      {"intercept", json_real(report.intercept)},
                      {"r2", json_real(report.r_squared)},
                      {"window", ordered_json::array({report.window_max.str(), report.window_min.str()})},
                      {"truncation_gap", report.truncation_gap.str()},
                      {"valid", report.valid},
                      {"samples", samples}};
}

}  // namespace boxdim
