#include "boxdim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxdim/errors.hpp"
#include "boxdim/generators.hpp"
#include "boxdim/io.hpp"
#include "boxdim/verify.hpp"

namespace boxdim {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitWindow = 3;

struct OutputOptions {
  std::string out_path;  // empty = stdout
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--out", opts->out_path, "Write the report to a file instead of stdout");
  cmd->add_option("--format", opts->format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void write_text(const OutputOptions& opts, std::ostream& out, std::ostream& err,
                const std::string& text) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw InputError("cannot write to " + opts.out_path);
  file << text;
  (void)err;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string cover_csv(const IntervalCover& cover) {
  std::ostringstream os;
  os << "left,right\n";
  for (const Rational& left : cover.lefts) {
    os << left.str() << "," << (left + cover.delta).str() << "\n";
  }
  return os.str();
}

std::string curve_csv(const CountCurve& curve) {
  std::ostringstream os;
  os << "delta,count\n";
  for (const auto& [delta, count] : curve.samples) {
    os << delta.str() << "," << count << "\n";
  }
  return os.str();
}

std::string verify_csv(const VerifyReport& report) {
  std::ostringstream os;
  os << "check,passed\n" << csv_escape(report.check_name) << "," << (report.passed ? 1 : 0) << "\n";
  return os.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int emit_verify(const VerifyReport& report, const OutputOptions& opts, std::ostream& out,
                std::ostream& err) {
  ordered_json j{{"check", report.check_name}, {"passed", report.passed},
                 {"details", report.details}};
  write_text(opts, out, err, opts.format == "csv" ? verify_csv(report) : dump(j));
  return report.passed ? kExitOk : kExitFailed;
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact covering numbers and box-dimension estimates for rational point sets"};
  app.require_subcommand(1);

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "Minimal delta-cover of a set");
  std::string cover_spec;
  std::string cover_delta;
  OutputOptions cover_out;
  cover_cmd->add_option("set", cover_spec, "Set spec (reciprocal:m, primepow:p:K, smooth:p,..:m, cantor:d, file:PATH)")
      ->required();
  cover_cmd->add_option("--delta", cover_delta, "Scale, e.g. 1/6")->required();
  add_output_flags(cover_cmd, &cover_out);

  // dim
  auto* dim_cmd = app.add_subcommand("dim", "Box-dimension estimate over a scale schedule");
  std::string dim_spec;
  std::string dim_scales = "geo:1/4:1/2:24";
  bool dim_force = false;
  OutputOptions dim_out;
  dim_cmd->add_option("set", dim_spec, "Set spec")->required();
  dim_cmd->add_option("--scales", dim_scales, "geo:<d0>:<ratio>:<steps> or pow3:<steps>");
  dim_cmd->add_flag("--force", dim_force, "Report even when scales probe below the resolution gap");
  add_output_flags(dim_cmd, &dim_out);

  // verify-lemma2
  auto* lemma2_cmd = app.add_subcommand("verify-lemma2", "Exact product-cover bound on random set pairs");
  unsigned lemma2_trials = 100;
  std::uint64_t lemma2_seed = 42;
  std::string lemma2_scales = "geo:1/3:1/2:6";
  OutputOptions lemma2_out;
  lemma2_cmd->add_option("--trials", lemma2_trials, "Number of random pairs");
  lemma2_cmd->add_option("--seed", lemma2_seed, "Generator seed");
  lemma2_cmd->add_option("--scales", lemma2_scales, "Scales checked per pair");
  add_output_flags(lemma2_cmd, &lemma2_out);

  // verify-bounds
  auto* bounds_cmd = app.add_subcommand("verify-bounds", "Exact counts against the analytic bounds");
  std::uint64_t bounds_m = 10000;
  std::string bounds_primes = "2,3,5";
  std::string bounds_scales = "geo:1/4:1/2:24";
  OutputOptions bounds_out;
  bounds_cmd->add_option("--max", bounds_m, "Reciprocal-set truncation");
  bounds_cmd->add_option("--primes", bounds_primes, "Primes for the upper-bound checks");
  bounds_cmd->add_option("--scales", bounds_scales, "Scale schedule");
  add_output_flags(bounds_cmd, &bounds_out);

  // verify-euclid
  auto* euclid_cmd = app.add_subcommand("verify-euclid", "Slope gap between 1/n and the smooth product set");
  std::string euclid_primes = "2,3,5";
  std::uint64_t euclid_m = 100000;
  std::string euclid_scales;
  double euclid_threshold = 0.25;
  OutputOptions euclid_out;
  euclid_cmd->add_option("--primes", euclid_primes, "Hypothetical complete prime list");
  euclid_cmd->add_option("--max", euclid_m, "Truncation for both sets");
  euclid_cmd->add_option("--scales", euclid_scales, "Explicit scales (default: deepest valid window)");
  euclid_cmd->add_option("--threshold", euclid_threshold, "Slope gap needed to pass");
  add_output_flags(euclid_cmd, &euclid_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  if (cover_cmd->parsed()) {
    PointSet set = resolve_set_spec(cover_spec);
    Rational delta = Rational::parse(cover_delta);
    IntervalCover cover = min_cover(set, delta);
    write_text(cover_out, out, err,
               cover_out.format == "csv" ? cover_csv(cover)
                                         : dump(cover_to_json(set.label(), cover)));
    return kExitOk;
  }

  if (dim_cmd->parsed()) {
    PointSet set = resolve_set_spec(dim_spec);
    ScaleSchedule schedule = parse_scales(dim_scales);
    CountCurve curve = count_curve(set, schedule);
    DimensionReport report = fit_slope(curve);
    write_text(dim_out, out, err,
               dim_out.format == "csv"
                   ? curve_csv(curve)
                   : dump(dimension_to_json(set.label(), schedule.spec_string(), curve, report)));
    if (!report.valid && !dim_force) {
      err << "error: schedule probes below the resolution gap " << report.truncation_gap.str()
          << " of '" << set.label() << "' (pass --force to keep the report)\n";
      return kExitWindow;
    }
    return kExitOk;
  }

  if (lemma2_cmd->parsed()) {
    VerifyReport report = verify_lemma2(lemma2_trials, lemma2_seed, parse_scales(lemma2_scales));
    return emit_verify(report, lemma2_out, out, err);
  }

  if (bounds_cmd->parsed()) {
    auto primes = parse_primes(bounds_primes);
    VerifyReport report = verify_bounds(bounds_m, primes, parse_scales(bounds_scales));
    return emit_verify(report, bounds_out, out, err);
  }

  if (euclid_cmd->parsed()) {
    EuclidOptions options;
    options.primes = parse_primes(euclid_primes);
    options.m = euclid_m;
    options.threshold = euclid_threshold;
    if (!euclid_scales.empty()) options.schedule = parse_scales(euclid_scales);
    VerifyReport report = verify_euclid(options);
    return emit_verify(report, euclid_out, out, err);
  }

  err << "error: no subcommand\n";
  return kExitInput;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const WindowError& e) {
    err << "error: " << e.what() << "\n";
    if (e.required_m() > 0) {
      err << "hint: a reciprocal truncation of at least m = " << e.required_m()
          << " would widen the window\n";
    }
    return kExitWindow;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace boxdim
