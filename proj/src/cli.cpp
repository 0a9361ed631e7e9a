#include "casimir/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "casimir/error.hpp"
#include "casimir/forces.hpp"
#include "casimir/geometry.hpp"
#include "casimir/io.hpp"
#include "casimir/kernels.hpp"
#include "casimir/verify.hpp"

namespace casimir::cli {
namespace {

using nlohmann::json;

const std::map<std::string, Command> kCommands = {{"profile", Command::Profile},
                                                  {"force", Command::Force},
                                                  {"sweep", Command::Sweep},
                                                  {"optimize", Command::Optimize},
                                                  {"verify", Command::Verify}};
const std::map<std::string, Format> kFormats = {{"csv", Format::Csv}, {"json", Format::Json}, {"svg", Format::Svg}};

Format default_format(Command command) {
  switch (command) {
    case Command::Profile:
    case Command::Sweep: return Format::Csv;
    default: return Format::Json;
  }
}

bool format_allowed(Command command, Format format) {
  switch (command) {
    case Command::Profile:
    case Command::Sweep:
    case Command::Optimize: return true;
    case Command::Force: return format != Format::Svg;
    case Command::Verify: return format == Format::Json;
  }
  return false;
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

[[noreturn]] void usage(const std::string& flag, const std::string& message) {
  throw Error(ErrorKind::Usage, flag, flag + ": " + message);
}

std::vector<double> parse_range(const std::string& text) {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 || !in.eof())
    usage("--range", "expected LO:HI:N with N >= 1, got '" + text + "'");
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : (i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1)));
  return out;
}

// Raw flag values before layering. `given` tracks which flags appeared.
struct RawFlags {
  std::string command;
  double a = 0, R = 0, L = 0, phi_deg = 0, tol = 0, lo_deg = 0, hi_deg = 0, opt_tol = 0;
  int samples = 0, wing_count = 0, workers = 0;
  std::string units, out, format, axis, range, config, quantity;
  std::vector<double> values;
};

template <class T>
T json_field(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    usage("--config", std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string to_string(Command command) {
  for (const auto& [name, value] : kCommands)
    if (value == command) return name;
  return "?";
}

std::string to_string(Format format) {
  for (const auto& [name, value] : kFormats)
    if (value == format) return name;
  return "?";
}

CavitySpec RunConfig::cavity() const { return {a, R, L, deg_to_rad(phi_deg), units}; }

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Casimir compression and expulsion forces on open trapezoid cavities", "casimir"};
  RawFlags raw;
  std::map<std::string, CLI::Option*> opt;
  opt["command"] = app.add_option("command", raw.command, "profile | force | sweep | optimize | verify")
                       ->check(CLI::IsMember({"profile", "force", "sweep", "optimize", "verify"}));
  opt["config"] = app.add_option("--config", raw.config, "JSON file with the same fields; flags override it");
  opt["a"] = app.add_option("--a", raw.a, "gap at the narrow end");
  opt["R"] = app.add_option("--R", raw.R, "wing length");
  opt["L"] = app.add_option("--L", raw.L, "width along y");
  opt["phi_deg"] = app.add_option("--phi-deg", raw.phi_deg, "half-opening angle in degrees");
  opt["units"] = app.add_option("--units", raw.units, "si | reduced")->check(CLI::IsMember({"si", "reduced"}));
  opt["tol"] = app.add_option("--tol", raw.tol, "relative quadrature tolerance");
  opt["samples"] = app.add_option("--samples", raw.samples, "profile samples / oracle grid size");
  opt["wing_count"] = app.add_option("--wing-count", raw.wing_count, "1 (per wing) or 2 (whole cavity)");
  opt["out"] = app.add_option("--out", raw.out, "output path, '-' for stdout");
  opt["format"] = app.add_option("--format", raw.format, "csv | json | svg")->check(CLI::IsMember({"csv", "json", "svg"}));
  opt["axis"] = app.add_option("--axis", raw.axis, "sweep axis: phi | R")->check(CLI::IsMember({"phi", "R"}));
  opt["values"] = app.add_option("--values", raw.values, "sweep values (degrees on the phi axis)")->delimiter(',');
  opt["range"] = app.add_option("--range", raw.range, "sweep values as LO:HI:N");
  opt["lo_deg"] = app.add_option("--lo-deg", raw.lo_deg, "optimizer bracket start, degrees");
  opt["hi_deg"] = app.add_option("--hi-deg", raw.hi_deg, "optimizer bracket end, degrees");
  opt["opt_tol"] = app.add_option("--opt-tol", raw.opt_tol, "optimizer bracket width, radians");
  opt["workers"] = app.add_option("--workers", raw.workers, "parallel workers for sweeps and the oracle");
  opt["quantity"] = app.add_option("--quantity", raw.quantity, "profile plot series: p_x | p_z")
                        ->check(CLI::IsMember({"p_x", "p_z"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ExtrasError& e) {
    std::string flag = "command";
    for (const auto& extra : app.remaining())
      if (extra.rfind("-", 0) == 0) {
        flag = extra.substr(0, extra.find('='));
        break;
      }
    usage(flag, e.what());
  } catch (const CLI::ParseError& e) {
    usage(e.get_name(), e.what());
  }

  auto given = [&](const char* key) { return opt.at(key)->count() > 0; };

  json file = json::object();
  if (given("config")) {
    std::ifstream in(raw.config);
    if (!in) usage("--config", "cannot open '" + raw.config + "'");
    try {
      file = json::parse(in);
    } catch (const json::exception& e) {
      usage("--config", e.what());
    }
    if (!file.is_object()) usage("--config", "top level must be an object");
    static const std::vector<std::string> known = {"command", "a",      "R",      "L",       "phi_deg", "units",
                                                   "tol",     "samples", "wing_count", "out", "format",  "axis",
                                                   "values",  "lo_deg", "hi_deg", "opt_tol", "workers", "quantity"};
    for (const auto& [key, _] : file.items())
      if (std::find(known.begin(), known.end(), key) == known.end()) usage("--config", "unknown field '" + key + "'");
  }
  auto from_file = [&](const char* key) { return file.contains(key); };

  // Layering: explicit flag, then config file, then default.
  auto pick_string = [&](const char* key, const std::string& flag_value, std::string fallback) {
    if (given(key)) return flag_value;
    if (from_file(key)) return json_field<std::string>(file, key);
    return fallback;
  };
  auto pick_double = [&](const char* key, double flag_value, double fallback) {
    if (given(key)) return flag_value;
    if (from_file(key)) return json_field<double>(file, key);
    return fallback;
  };
  auto pick_int = [&](const char* key, int flag_value, int fallback) {
    if (given(key)) return flag_value;
    if (from_file(key)) return json_field<int>(file, key);
    return fallback;
  };

  RunConfig c;
  const std::string command = pick_string("command", raw.command, "");
  if (command.empty()) usage("command", "a command is required (profile, force, sweep, optimize, verify)");
  if (!kCommands.count(command)) usage("command", "unknown command '" + command + "'");
  c.command = kCommands.at(command);

  const std::string units = pick_string("units", raw.units, "si");
  if (!parse_units(units)) usage("--units", "expected si or reduced, got '" + units + "'");
  c.units = *parse_units(units);
  const bool si = c.units == Units::SI;
  c.a = pick_double("a", raw.a, si ? 4e-7 : 1.0);
  c.R = pick_double("R", raw.R, si ? 4e-6 : 10.0);
  c.L = pick_double("L", raw.L, 1.0);
  c.phi_deg = pick_double("phi_deg", raw.phi_deg, 1.0);
  c.tol = pick_double("tol", raw.tol, 1e-9);
  c.samples = pick_int("samples", raw.samples, 512);
  c.wing_count = pick_int("wing_count", raw.wing_count, 1);
  c.out = pick_string("out", raw.out, "-");

  const std::string format = pick_string("format", raw.format, to_string(default_format(c.command)));
  if (!kFormats.count(format)) usage("--format", "expected csv, json or svg, got '" + format + "'");
  c.format = kFormats.at(format);
  if (!format_allowed(c.command, c.format))
    usage("--format", "format '" + format + "' is not available for '" + command + "'");

  const std::string axis = pick_string("axis", raw.axis, "phi");
  if (!parse_axis(axis)) usage("--axis", "expected phi or R, got '" + axis + "'");
  c.axis = *parse_axis(axis);
  if (given("values") && given("range")) usage("--range", "use either --values or --range");
  if (given("values")) c.values = raw.values;
  else if (given("range")) c.values = parse_range(raw.range);
  else if (from_file("values")) c.values = json_field<std::vector<double>>(file, "values");

  c.lo_deg = pick_double("lo_deg", raw.lo_deg, 0.1);
  c.hi_deg = pick_double("hi_deg", raw.hi_deg, 44.9);
  c.opt_tol = pick_double("opt_tol", raw.opt_tol, 1e-5);
  c.workers = pick_int("workers", raw.workers, 1);
  c.quantity = pick_string("quantity", raw.quantity, "p_z");
  if (c.quantity != "p_x" && c.quantity != "p_z") usage("--quantity", "expected p_x or p_z");

  if (!(c.tol > 0.0)) usage("--tol", "must be positive");
  if (c.samples < 2) usage("--samples", "must be at least 2");
  if (c.wing_count != 1 && c.wing_count != 2) usage("--wing-count", "must be 1 or 2");
  if (c.workers < 1) usage("--workers", "must be at least 1");
  if (c.command == Command::Sweep && c.values.empty()) usage("--values", "sweep needs --values or --range");
  for (std::size_t i = 1; i < c.values.size(); ++i)
    if (!(c.values[i - 1] < c.values[i])) usage("--values", "values must be strictly increasing");

  try {
    validate(c.cavity());
  } catch (const Error& e) {
    static const std::map<std::string, std::string> flag_of = {
        {"a", "--a"}, {"R", "--R"}, {"L", "--L"}, {"phi", "--phi-deg"}};
    const auto it = flag_of.find(e.field());
    throw Error(ErrorKind::InvalidCavity, it == flag_of.end() ? e.field() : it->second, e.what());
  }
  return c;
}

std::vector<std::string> render_args(const RunConfig& c) {
  using io::format_number;
  std::vector<std::string> out = {to_string(c.command),
                                  "--units", std::string(casimir::to_string(c.units)),
                                  "--a", format_number(c.a),
                                  "--R", format_number(c.R),
                                  "--L", format_number(c.L),
                                  "--phi-deg", format_number(c.phi_deg),
                                  "--tol", format_number(c.tol),
                                  "--samples", std::to_string(c.samples),
                                  "--wing-count", std::to_string(c.wing_count),
                                  "--out", c.out,
                                  "--format", to_string(c.format),
                                  "--axis", casimir::to_string(c.axis)};
  if (!c.values.empty()) {
    std::string joined;
    for (double v : c.values) joined += (joined.empty() ? "" : ",") + format_number(v);
    out.insert(out.end(), {"--values", joined});
  }
  out.insert(out.end(), {"--lo-deg", format_number(c.lo_deg), "--hi-deg", format_number(c.hi_deg), "--opt-tol",
                         format_number(c.opt_tol), "--workers", std::to_string(c.workers), "--quantity", c.quantity});
  return out;
}

namespace {

void emit(const RunConfig& c, const std::string& bytes, std::ostream& out) {
  if (c.out.empty() || c.out == "-") {
    out << bytes;
    out.flush();
  } else {
    io::write_file_atomic(c.out, bytes);
  }
}

int report_error(std::ostream& err, const Error& e) {
  err << io::error_json(std::string(to_string(e.kind())), e.field(), e.what()).dump() << '\n';
  return e.is_usage() ? 2 : 1;
}

std::string run_profile(const RunConfig& c) {
  const PressureProfile profile = pressure_profile(c.cavity(), c.samples);
  if (c.format == Format::Csv) return io::emit_csv(profile);
  if (c.format == Format::Json) return io::dump(io::to_json(profile));

  const bool pz = c.quantity == "p_z";
  io::PlotSpec plot;
  plot.x_label = c.units == Units::SI ? "r [m]" : "r / a";
  plot.y_label = pz ? "p_z" : "p_x";
  io::Series s{plot.y_label, {}};
  for (const auto& p : profile.samples) s.points.emplace_back(p.r, pz ? p.p_z : p.p_x);
  plot.series.push_back(std::move(s));
  if (pz) {
    plot.reference_y = classical_casimir_pressure(c.a, pressure_prefactor(c.units));
    plot.reference_label = "classical parallel-plate pressure";
  }
  return io::emit_svg(plot);
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Profile: {
        emit(c, run_profile(c), out);
        return 0;
      }
      case Command::Force: {
        ForceOptions fo;
        fo.rel_tol = c.tol;
        fo.wing_count = c.wing_count;
        const ForceResult f = total_forces(c.cavity(), fo);
        if (c.format == Format::Csv) {
          SweepTable one{SweepAxis::Phi, c.cavity(), {SweepRow{c.cavity().phi, f, {}}}};
          emit(c, io::emit_csv(one), out);
        } else {
          emit(c, io::dump(io::to_json(f)), out);
        }
        if (!f.converged) {
          err << io::error_json("NotConverged", "tol", "force quadrature did not reach the requested tolerance").dump()
              << '\n';
          return 1;
        }
        return 0;
      }
      case Command::Sweep: {
        SweepOptions so;
        so.force.rel_tol = c.tol;
        so.force.wing_count = c.wing_count;
        so.workers = c.workers;
        std::vector<double> values = c.values;
        if (c.axis == SweepAxis::Phi)
          for (double& v : values) v = deg_to_rad(v);
        const SweepTable table = sweep(c.cavity(), c.axis, values, so);
        if (c.format == Format::Csv) {
          emit(c, io::emit_csv(table), out);
        } else if (c.format == Format::Json) {
          emit(c, io::dump(io::to_json(table)), out);
        } else {
          io::PlotSpec plot;
          plot.x_label = c.axis == SweepAxis::Phi ? "phi [rad]" : "R";
          plot.y_label = "|f_x|";
          io::Series s{"|f_x|", {}};
          for (const auto& row : table.rows)
            if (row.result) s.points.emplace_back(row.param, std::abs(row.result->f_x));
          plot.series.push_back(std::move(s));
          emit(c, io::emit_svg(plot), out);
        }
        for (const auto& row : table.rows)
          if (!row.converged()) {
            err << io::error_json("NotConverged", "values", "one or more sweep rows failed").dump() << '\n';
            return 1;
          }
        return 0;
      }
      case Command::Optimize: {
        OptimizeOptions oo;
        oo.wing_count = c.wing_count;
        oo.prescan_points = 32;
        const OptimumReport report =
            optimize_phi(c.cavity(), deg_to_rad(c.lo_deg), deg_to_rad(c.hi_deg), c.opt_tol, oo);
        if (c.format == Format::Svg) {
          io::PlotSpec plot;
          plot.x_label = "phi [rad]";
          plot.y_label = "|f_x|";
          io::Series s{"|f_x| prescan", {}};
          for (const auto& [phi, fx] : report.grid_prescan) s.points.emplace_back(phi, std::abs(fx));
          plot.series.push_back(std::move(s));
          emit(c, io::emit_svg(plot), out);
        } else if (c.format == Format::Csv) {
          std::string csv = "phi,f_x\n";
          for (const auto& [phi, fx] : report.grid_prescan)
            csv += io::format_number(phi) + ',' + io::format_number(fx) + '\n';
          emit(c, csv, out);
        } else {
          emit(c, io::dump(io::to_json(report)), out);
        }
        return 0;
      }
      case Command::Verify: {
        VerifyOptions vo;
        vo.riemann_n = c.samples;
        vo.workers = c.workers;
        const auto reports = verify_suite(c.cavity(), vo);
        emit(c, io::dump(io::to_json(reports, c.cavity())), out);
        if (!all_pass(reports)) {
          err << io::error_json("VerificationFailed", "", "one or more oracle checks failed").dump() << '\n';
          return 1;
        }
        return 0;
      }
    }
  } catch (const Error& e) {
    return report_error(err, e);
  } catch (const std::exception& e) {
    err << io::error_json("Internal", "", e.what()).dump() << '\n';
    return 1;
  }
  return 1;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const CLI::CallForHelp&) {
    out << "usage: casimir {profile|force|sweep|optimize|verify} [--a A] [--R R] [--L L] [--phi-deg DEG]\n"
           "               [--units si|reduced] [--tol TOL] [--samples N] [--wing-count 1|2]\n"
           "               [--axis phi|R] [--values V1,V2,...|--range LO:HI:N] [--lo-deg DEG] [--hi-deg DEG]\n"
           "               [--opt-tol RAD] [--workers N] [--quantity p_x|p_z]\n"
           "               [--format csv|json|svg] [--out PATH] [--config FILE.json]\n";
    return 0;
  } catch (const Error& e) {
    return report_error(err, e);
  }
  return run(config, out, err);
}

}  // namespace casimir::cli
