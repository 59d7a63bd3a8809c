// Copyright 2026 The Spiraltile Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "service/cli.h"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "service/api.h"
#include "service/http_server.h"
#include "service/tables.h"
#include "spiraltile/errors.h"
#include "spiraltile/solver.h"

namespace spiraltile::service {
namespace {

using json = nlohmann::json;

// Flags shared by every subcommand that names a system.
struct DesignFlags {
  std::string family;
  int n = 0;
  int m = 0;
  double phi = 0.0;
  double kappa = 0.0;
  std::string sense;
  int solution = 0;
  std::string system_file;
  std::vector<CLI::Option*> opts;

  void Add(CLI::App* app, bool with_solution, bool with_system) {
    opts.push_back(app->add_option("--family", family,
                                   "quad | tri-omega-phi | tri-omega-zero"));
    opts.push_back(app->add_option("--n", n, "lambda branch count"));
    opts.push_back(app->add_option("--m", m, "kappa branch count"));
    opts.push_back(app->add_option("--phi", phi, "phi in degrees"));
    opts.push_back(app->add_option("--kappa", kappa, "kappa (quad only)"));
    opts.push_back(app->add_option("--sense", sense, "co | contra"));
    if (with_solution) {
      opts.push_back(app->add_option("--solution", solution,
                                     "root index, ascending kappa"));
    }
    if (with_system) {
      opts.push_back(app->add_option("--system", system_file,
                                     "SpiralSystem JSON file"));
    }
  }

  bool Given(const char* name) const {
    for (const CLI::Option* o : opts) {
      if (o->get_name() == name) return o->count() > 0;
    }
    return false;
  }

  // Throws Error(kInvalidArgument) when the system file is unreadable.
  json Request() const {
    json req = json::object();
    if (Given("--family")) req["family"] = family;
    if (Given("--n")) req["n"] = n;
    if (Given("--m")) req["m"] = m;
    if (Given("--phi")) req["phi_deg"] = phi;
    if (Given("--kappa")) req["kappa"] = kappa;
    if (Given("--sense")) req["sense"] = sense;
    if (Given("--solution")) req["solution_index"] = solution;
    if (Given("--system")) {
      std::ifstream in(system_file);
      if (!in) {
        throw Error(ErrorCode::kInvalidArgument,
                    "system: cannot read " + system_file);
      }
      try {
        req["system"] = json::parse(in);
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::kInvalidArgument,
                    "system: malformed JSON in " + system_file + ": " +
                        e.what());
      }
    }
    return req;
  }
};

bool WriteText(const std::string& text, const std::string& path,
               std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

// Prints a response and maps it to an exit code.
int Emit(const Response& r, const std::string& path, std::ostream& out,
         std::ostream& err) {
  if (r.outcome == Outcome::kBadRequest ||
      r.outcome == Outcome::kInternalError) {
    // Errors go to stderr so stdout never holds a half-valid document.
    err << Dump(r.body);
    return r.exit_code();
  }
  if (!WriteText(r.Text(), path, out, err)) return 1;
  return r.exit_code();
}

int Usage(std::ostream& err, const std::string& field,
          const std::string& message) {
  err << Dump({{"status", "error"},
               {"error",
                {{"code", "InvalidArgument"},
                 {"field", field},
                 {"message", message}}}});
  return 1;
}

}  // namespace

int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Design engine for closed equiangular spiral tilings",
               "spiraltile"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format;
  std::function<int()> action;

  auto add_common = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--out", out_path, "write output here instead of stdout");
    sub->add_option("--format", format, formats);
  };
  auto check_format = [&](const std::vector<std::string>& allowed) {
    if (format.empty()) format = allowed.front();
    for (const auto& a : allowed) {
      if (a == format) return true;
    }
    return false;
  };

  DesignFlags design;
  auto* design_cmd = app.add_subcommand("design", "build one closed system");
  design.Add(design_cmd, true, false);
  add_common(design_cmd, "json");

  DesignFlags solve;
  auto* solve_cmd =
      app.add_subcommand("solve", "all roots of a triangular system");
  solve.Add(solve_cmd, false, false);
  add_common(solve_cmd, "json");

  DesignFlags feas;
  auto* feas_cmd =
      app.add_subcommand("feasibility", "evaluate every feasibility rule");
  feas.Add(feas_cmd, false, false);
  add_common(feas_cmd, "json");

  int pm_n = 0;
  int pm_m = 0;
  auto* pm_cmd = app.add_subcommand(
      "phimax", "largest phi admitting an omega = phi co-rotating tiling");
  pm_cmd->add_option("--n", pm_n)->required();
  pm_cmd->add_option("--m", pm_m)->required();
  add_common(pm_cmd, "json");

  auto* t3_cmd = app.add_subcommand(
      "table3", "regenerate the reference figures with divergence angles");
  add_common(t3_cmd, "csv | json");

  std::string t4_m = "1..8";
  std::string t4_n = "3..9";
  auto* t4_cmd = app.add_subcommand("table4", "phi_max over a grid of (m, n)");
  t4_cmd->add_option("--m", t4_m, "range a..b")->capture_default_str();
  t4_cmd->add_option("--n", t4_n, "range a..b")->capture_default_str();
  add_common(t4_cmd, "csv | json");

  DesignFlags div;
  auto* div_cmd =
      app.add_subcommand("divergence", "phyllotaxis divergence angle");
  div.Add(div_cmd, true, true);
  add_common(div_cmd, "json");

  DesignFlags eq;
  auto* eq_cmd = app.add_subcommand(
      "equivalent", "omega = phi equivalent of an omega = 0 system");
  eq.Add(eq_cmd, true, true);
  add_common(eq_cmd, "json");

  DesignFlags render;
  double r0 = 1.0;
  double alpha0 = 0.0;
  int rings = 0;
  double stroke_width = 0.0;
  double canvas_size = 0.0;
  std::vector<std::string> palette;
  std::string sidecar_path;
  auto* render_cmd = app.add_subcommand("render", "draw the tiling as SVG");
  render.Add(render_cmd, true, true);
  add_common(render_cmd, "svg");
  auto* r0_opt = render_cmd->add_option("--r0", r0, "radius of A_00");
  auto* alpha_opt =
      render_cmd->add_option("--alpha0", alpha0, "angle of A_00, degrees");
  auto* rings_opt =
      render_cmd->add_option("--rings", rings, "kappa rows to draw");
  auto* stroke_opt = render_cmd->add_option("--stroke-width", stroke_width);
  auto* canvas_opt = render_cmd->add_option("--canvas-size", canvas_size);
  auto* palette_opt =
      render_cmd->add_option("--palette", palette, "fill colours")
          ->delimiter(',');
  render_cmd->add_option("--sidecar", sidecar_path,
                         "write vertex coordinates as JSON");

  std::string host = "127.0.0.1";
  int port = DefaultPort();
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP JSON API");
  serve_cmd->add_option("--host", host)->capture_default_str();
  serve_cmd->add_option("--port", port)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    // Subcommand help lands here as well.
    if (e.get_exit_code() == 0) {
      for (CLI::App* sub : app.get_subcommands()) out << sub->help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return 1;
  }

  auto run_endpoint = [&](Endpoint ep, const DesignFlags& flags,
                          const std::vector<std::string>& formats,
                          json extra) -> int {
    if (!check_format(formats)) {
      return Usage(err, "format", "unsupported format \"" + format + "\"");
    }
    json req;
    try {
      req = flags.Request();
    } catch (const Error& e) {
      return Usage(err, "system", e.what());
    }
    for (auto& [k, v] : extra.items()) req[k] = v;
    return Emit(Handle(ep, req), out_path, out, err);
  };

  try {
    if (design_cmd->parsed()) {
      return run_endpoint(Endpoint::kDesign, design, {"json"}, json::object());
    }
    if (solve_cmd->parsed()) {
      return run_endpoint(Endpoint::kSolve, solve, {"json"}, json::object());
    }
    if (feas_cmd->parsed()) {
      return run_endpoint(Endpoint::kFeasibility, feas, {"json"},
                          json::object());
    }
    if (div_cmd->parsed()) {
      return run_endpoint(Endpoint::kDivergence, div, {"json"},
                          json::object());
    }
    if (eq_cmd->parsed()) {
      return run_endpoint(Endpoint::kEquivalent, eq, {"json"},
                          json::object());
    }
    if (pm_cmd->parsed()) {
      if (!check_format({"json"})) {
        return Usage(err, "format", "unsupported format \"" + format + "\"");
      }
      return Emit(Handle(Endpoint::kPhiMax, {{"n", pm_n}, {"m", pm_m}}),
                  out_path, out, err);
    }
    if (render_cmd->parsed()) {
      json extra = json::object();
      if (r0_opt->count()) extra["r0"] = r0;
      if (alpha_opt->count()) extra["alpha0_deg"] = alpha0;
      if (rings_opt->count()) extra["rings"] = rings;
      json style = json::object();
      if (stroke_opt->count()) style["stroke_width"] = stroke_width;
      if (canvas_opt->count()) style["canvas_size"] = canvas_size;
      if (palette_opt->count()) style["palette"] = palette;
      if (!style.empty()) extra["style"] = style;
      if (!check_format({"svg"})) {
        return Usage(err, "format", "unsupported format \"" + format + "\"");
      }
      json req;
      try {
        req = render.Request();
      } catch (const Error& e) {
        return Usage(err, "system", e.what());
      }
      for (auto& [k, v] : extra.items()) req[k] = v;
      const Response r = Handle(Endpoint::kRender, req);
      const int code = Emit(r, out_path, out, err);
      if (code == 0 && !sidecar_path.empty() &&
          !WriteText(Dump(r.sidecar), sidecar_path, out, err)) {
        return 1;
      }
      return code;
    }
    if (t3_cmd->parsed()) {
      if (!check_format({"csv", "json"})) {
        return Usage(err, "format", "unsupported format \"" + format + "\"");
      }
      const auto rows = Table3();
      const std::string text =
          format == "csv" ? Table3Csv(rows) : Dump(Table3Json(rows));
      return WriteText(text, out_path, out, err) ? 0 : 1;
    }
    if (t4_cmd->parsed()) {
      if (!check_format({"csv", "json"})) {
        return Usage(err, "format", "unsupported format \"" + format + "\"");
      }
      IntRange mr;
      IntRange nr;
      try {
        mr = ParseIntRange(t4_m, "m");
        nr = ParseIntRange(t4_n, "n");
      } catch (const Error& e) {
        const std::string msg = e.what();
        return Usage(err, msg.substr(0, msg.find(':')), msg);
      }
      const auto cells = PhiMaxTable(mr.lo, mr.hi, nr.lo, nr.hi);
      const std::string text =
          format == "csv" ? Table4Csv(cells) : Dump(Table4Json(cells));
      return WriteText(text, out_path, out, err) ? 0 : 1;
    }
    if (serve_cmd->parsed()) {
      HttpService service;
      const int bound = service.Bind(host, port);
      if (bound < 0) {
        err << "error: cannot bind " << host << ":" << port << "\n";
        return 1;
      }
      err << "listening on http://" << host << ":" << bound << "\n";
      return service.Serve() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << Dump({{"status", "error"},
                 {"error", {{"code", "InternalInconsistency"},
                            {"message", e.what()}}}});
    return 1;
  }
  err << app.help();
  return 1;
}

}  // namespace spiraltile::service
