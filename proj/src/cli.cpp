#include "leafspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "leafspec/io.hpp"

namespace leafspec {

namespace {

struct LoadedInput {
  InputKind kind = InputKind::RawSeries;
  HilbertSeries series;
  std::optional<FiniteMatrixGroup> group;
};

LoadedInput load_input(const std::string& path, unsigned cap_flag) {
  Json doc = read_json_file(path);
  LoadedInput in;
  in.kind = detect_input(doc);
  switch (in.kind) {
    case InputKind::Group: {
      GroupDocument gd = group_from_json(doc);
      unsigned cap = cap_flag != 0 ? cap_flag : gd.cap.value_or(kDefaultGroupCap);
      in.group = enumerate_group(gd.generators, cap, gd.dim);
      in.series = from_molien(*in.group);
      break;
    }
    case InputKind::Hironaka:
      in.series = from_hironaka(hironaka_from_json(doc));
      break;
    case InputKind::RawSeries:
      in.series = from_raw(ratfunc_from_json(doc));
      break;
  }
  return in;
}

const char* kind_name(InputKind kind) {
  switch (kind) {
    case InputKind::Group: return "group";
    case InputKind::Hironaka: return "hironaka";
    case InputKind::RawSeries: return "series";
  }
  return "?";
}

Json coefficient_list(const RationalFunction<Rational>& f, unsigned depth) {
  Json out = Json::array();
  for (const auto& c : series_coefficients(f, depth)) out.push_back(rational_str(c));
  return out;
}

// Row indices worth printing: dense at the start, then round numbers, always
// the last row.  Full tables at large k_max are noise.
std::vector<unsigned> checkpoints(unsigned k_max) {
  std::vector<unsigned> ks;
  if (k_max <= 24) {
    for (unsigned k = 1; k <= k_max; ++k) ks.push_back(k);
    return ks;
  }
  for (unsigned k = 1; k <= 10; ++k) ks.push_back(k);
  for (unsigned long base = 10; base < k_max; base *= 10) {
    for (unsigned long mul : {2ul, 3ul, 5ul, 10ul}) {
      unsigned long k = base * mul;
      if (k < k_max) ks.push_back(static_cast<unsigned>(k));
    }
  }
  ks.push_back(k_max);
  return ks;
}

unsigned resolve_sphere_dim(const LoadedInput& in, unsigned n_flag) {
  if (in.group) {
    unsigned from_group = in.group->dim >= 1 ? in.group->dim - 1 : 0;
    if (n_flag != 0 && n_flag != from_group) {
      throw ParseError("--n " + std::to_string(n_flag) + " contradicts the group input (S^" +
                       std::to_string(from_group) + ")");
    }
    return from_group;
  }
  if (n_flag == 0) throw ParseError("--n is required for this input kind");
  return n_flag;
}

void cmd_molien(Json& payload, const std::string& file, unsigned cap, unsigned depth) {
  Json doc = read_json_file(file);
  if (detect_input(doc) != InputKind::Group) {
    throw ParseError("molien needs a matrix-group input (a \"generators\" field)");
  }
  GroupDocument gd = group_from_json(doc);
  unsigned effective_cap = cap != 0 ? cap : gd.cap.value_or(kDefaultGroupCap);
  FiniteMatrixGroup group = enumerate_group(gd.generators, effective_cap, gd.dim);
  HilbertSeries h = from_molien(group);

  payload["group_order"] = group.order();
  payload["conductor"] = group.conductor;
  payload["dim"] = group.dim;
  payload["fixed_subspace_dim"] = fixed_subspace_dimension(group);
  payload["series"] = ratfunc_json(h.function);
  payload["coefficients"] = coefficient_list(h.function, depth);
}

void cmd_analyze(Json& payload, const std::string& file, unsigned cap) {
  LoadedInput in = load_input(file, cap);
  VolumeReport report = volume_ratio(in.series);
  payload["source"] = kind_name(in.kind);
  if (in.group) payload["group_order"] = in.group->order();
  payload["series"] = ratfunc_json(in.series.function);
  payload["volume"] = volume_report_json(report);
  payload["cm_check"] = cm_report_json(cm_pole_check(in.series));
}

void cmd_spectrum(Json& payload, const std::string& file, unsigned cap, unsigned n_flag,
                  unsigned k_max, double s) {
  LoadedInput in = load_input(file, cap);
  unsigned n = resolve_sphere_dim(in, n_flag);
  VolumeReport report = volume_ratio(in.series);
  BasicSpectrum spec = harmonic_multiplicities(in.series, n, k_max);
  std::vector<WeylRow> rows = weyl_table(spec, report, k_max);

  std::vector<WeylRow> picked;
  for (unsigned k : checkpoints(k_max)) picked.push_back(rows[k - 1]);

  unsigned k_heat = std::max(k_max, heat_truncation(n, s));
  BasicSpectrum heat_spec =
      k_heat == k_max ? spec : harmonic_multiplicities(in.series, n, k_heat);
  HeatTrace heat = heat_trace(heat_spec, s);
  double limit = report.weyl_constant.to_double() * gamma_half(report.m).value();

  payload["source"] = kind_name(in.kind);
  payload["n"] = n;
  payload["m"] = report.m;
  payload["weyl_constant"] = rational_str(report.weyl_constant);
  payload["k_max"] = k_max;
  payload["rows"] = weyl_rows_json(picked);
  payload["b_series_identity"] = b_series_identity(in.series, spec, k_max);
  payload["heat_trace"] = Json{{"s", s},
                               {"truncation_k", k_heat},
                               {"value", heat.value},
                               {"tail_bound", heat.tail_bound},
                               {"scaled_value", heat.value * std::pow(s, report.m / 2.0)},
                               {"small_s_limit", limit}};
}

void cmd_catalog_run(Json& payload, const std::string& name) {
  CatalogEntry entry = get_entry(name);
  HilbertSeries h = entry_series(entry);
  VolumeReport report = volume_ratio(h);
  payload["name"] = entry.name;
  payload["ambient_n"] = entry.ambient_n;
  payload["expected_m"] = entry.expected_m;
  payload["expected_ratio"] = rational_str(entry.expected_ratio);
  payload["has_group"] = entry.has_group;
  payload["has_hironaka"] = entry.hironaka.has_value();
  payload["series"] = ratfunc_json(h.function);
  payload["volume"] = volume_report_json(report);
  payload["cm_check"] = cm_report_json(cm_pole_check(h));
  payload["check"] = entry_check_json(check_entry(entry));
}

// Returns the number of failing entries.
unsigned cmd_catalog_verify(Json& payload, bool all, const std::vector<std::string>& names) {
  std::vector<EntryCheck> checks;
  if (all || names.empty()) {
    checks = verify_all();
  } else {
    checks.reserve(names.size());
    for (const auto& name : names) checks.push_back(check_entry(get_entry(name)));
  }
  unsigned failures = 0;
  Json rows = Json::array();
  for (const auto& c : checks) {
    if (!c.pass) ++failures;
    rows.push_back(entry_check_json(c));
  }
  payload["entries"] = rows;
  payload["pass"] = failures == 0;
  return failures;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  Json payload;
  unsigned verify_failures = 0;

  CLI::App app{"exact Hilbert series, leaf-space volume ratios, and spectral checks"};
  app.name("leafspec");
  app.require_subcommand(1);

  std::string file, entry_name;
  unsigned cap = 0, depth = 16, n_flag = 0, k_max = 100;
  double heat_s = 1e-3;
  bool verify_every = false;
  std::vector<std::string> verify_names;

  auto* molien = app.add_subcommand("molien", "Molien series of a finite matrix group");
  molien->add_option("file", file, "group description (JSON)")->required();
  molien->add_option("--cap", cap, "abort if the closure exceeds this many elements");
  molien->add_option("--series-depth", depth, "Taylor coefficients to print")
      ->capture_default_str();
  molien->callback([&] { cmd_molien(payload, file, cap, depth); });

  auto* analyze = app.add_subcommand("analyze", "dimension, volume ratio, pole constraints");
  analyze->add_option("file", file, "group, Hironaka, or series input (JSON)")->required();
  analyze->add_option("--cap", cap, "group closure cap");
  analyze->callback([&] { cmd_analyze(payload, file, cap); });

  auto* spectrum = app.add_subcommand("spectrum", "Weyl table, b-series check, heat trace");
  spectrum->add_option("file", file, "group, Hironaka, or series input (JSON)")->required();
  spectrum->add_option("--cap", cap, "group closure cap");
  spectrum->add_option("--n", n_flag, "ambient sphere dimension (group inputs know it)");
  spectrum->add_option("--k-max", k_max, "table depth")->check(CLI::Range(1u, 2000000u))
      ->capture_default_str();
  spectrum->add_option("--heat-s", heat_s, "heat-trace parameter s")
      ->check(CLI::PositiveNumber)->capture_default_str();
  spectrum->callback([&] { cmd_spectrum(payload, file, cap, n_flag, k_max, heat_s); });

  auto* catalog = app.add_subcommand("catalog", "bundled worked examples");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "names of the bundled entries");
  cat_list->callback([&] {
    payload["entries"] = list_entries();
  });
  auto* cat_run = catalog->add_subcommand("run", "full report for one entry");
  cat_run->add_option("name", entry_name, "entry name, e.g. B2 or trivial(2)")->required();
  cat_run->callback([&] { cmd_catalog_run(payload, entry_name); });
  auto* cat_verify = catalog->add_subcommand("verify", "re-derive and check expected values");
  cat_verify->add_flag("--all", verify_every, "verify every bundled entry");
  cat_verify->add_option("names", verify_names, "specific entries to verify");
  cat_verify->callback(
      [&] { verify_failures = cmd_catalog_verify(payload, verify_every, verify_names); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Covers --help (exit 0) and genuine usage errors alike; CLI11 renders
    // the right help text for whichever subcommand was selected.
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? 0 : 2;
    result.payload = out.str();
    result.diagnostics = err.str();
    return result;
  } catch (const Error& e) {
    result.exit_code = static_cast<int>(e.kind);
    result.diagnostics = e.what();
    return result;
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.diagnostics = e.what();
    return result;
  }

  result.payload = payload.dump(2);
  if (verify_failures != 0) {
    result.exit_code = static_cast<int>(ErrorKind::Validation);
    result.diagnostics = std::to_string(verify_failures) + " catalog entr" +
                         (verify_failures == 1 ? "y" : "ies") + " failed verification";
  }
  return result;
}

}  // namespace leafspec
