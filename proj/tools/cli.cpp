#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "bernlab/bernlab.hpp"

namespace bernlab::cli {

namespace {

struct Options {
  double alpha = 0.5;
  double beta = 0.0;
  std::string variant = "full";
  std::string p = "2";
  double sigma = 1.0;
  int degree = 8;
  std::vector<int> degrees;
  double half_width = 1.0;
  double grid_floor = 1e-14;
  int nodes_per_panel = 40;
  std::string method = "richardson_1overN";
  bool serial = false;
  double tol = 1e-12;
  std::string function = "cosine";
  double tau = 0.5;
  double C = 0.0;
  double eta = 2.0;
  std::string format = "json";
  std::string output;
};

struct Outcome {
  Json result;
  std::string csv;    // body for --format csv
  std::string plain;  // body for --format plain
  int code = kExitOk;
};

struct Command {
  Json parameters;
  std::function<Outcome()> execute;
};

std::string text(double value) { return format_double(value); }

GridOptions grid_options(const Options& o) {
  GridOptions grid;
  grid.origin_floor = o.grid_floor;
  grid.nodes_per_panel = o.nodes_per_panel;
  return grid;
}

Json grid_echo(const Options& o) {
  return {{"grid_floor", o.grid_floor}, {"nodes_per_panel", o.nodes_per_panel}};
}

FunctionSpec spec_of(const Options& o) { return FunctionSpec(o.alpha, o.beta, parse_variant(o.variant)); }

Json spec_echo(const Options& o) {
  return {{"alpha", o.alpha}, {"beta", o.beta}, {"variant", to_string(parse_variant(o.variant))}};
}

Json merged(Json base, const Json& extra) {
  for (const auto& [key, value] : extra.items()) base[key] = value;
  return base;
}

std::string key_value_csv(const Json& flat) {
  std::string out = "key,value\n";
  for (const auto& [key, value] : flat.items()) {
    out += key + ',' + (value.is_string() ? value.get<std::string>() : value.dump()) + '\n';
  }
  return out;
}

std::string key_value_plain(const Json& flat) {
  std::string out;
  for (const auto& [key, value] : flat.items()) {
    out += key + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

Command constant_command(const Options& o) {
  const PNorm p = parse_pnorm(o.p);
  Json params = merged(spec_echo(o), {{"p", pnorm_to_json(p)}});
  if (p.is_infinite()) params["sigma"] = o.sigma;
  return {params, [o, p] {
            BernsteinConstant c;
            if (p == PNorm(1.0)) {
              if (o.beta != 0.0) raise(ErrorKind::domain, "no closed form for p = 1 with beta != 0");
              c = bernstein_l1(o.alpha);
            } else if (p == PNorm(2.0)) {
              if (parse_variant(o.variant) != Variant::full) {
                raise(ErrorKind::domain, "the p = 2 closed form covers the full variant only");
              }
              c = bernstein_l2(o.alpha, o.beta);
            } else if (p.is_infinite()) {
              if (o.alpha != 0.0) raise(ErrorKind::domain, "the p = inf closed form needs alpha = 0");
              c = bernstein_linf_log(o.beta, o.sigma, parse_variant(o.variant));
            } else {
              raise(ErrorKind::domain, "closed forms exist for p = 1, 2 and inf only");
            }
            Outcome out;
            out.result = to_json(c);
            Json flat = {{"value", out.result["value"]}, {"provenance", out.result["provenance"]}};
            out.csv = key_value_csv(flat);
            out.plain = key_value_plain(flat);
            return out;
          }};
}

Command error_command(const Options& o) {
  const PNorm p = parse_pnorm(o.p);
  Json params = merged(spec_echo(o), {{"p", pnorm_to_json(p)}, {"degree", o.degree}, {"half_width", o.half_width}});
  params = merged(params, grid_echo(o));
  return {params, [o, p] {
            ApproxProblem problem = ApproxProblem::for_spec(spec_of(o), o.degree, p, o.half_width);
            problem.grid.origin_floor = o.grid_floor;
            problem.grid.nodes_per_panel = o.nodes_per_panel;
            const ApproxResult r = solve(problem);
            Outcome out;
            out.result = to_json(r);
            Json flat = {{"error", out.result["error"]},
                         {"converged", r.diagnostics.converged},
                         {"method", r.diagnostics.method},
                         {"iterations", r.diagnostics.iterations},
                         {"discretized", r.discretized}};
            out.csv = key_value_csv(flat);
            out.plain = key_value_plain(flat);
            out.code = r.diagnostics.converged ? kExitOk : kExitNumerical;
            return out;
          }};
}

std::vector<int> table_degrees(const Options& o, const PNorm& p) {
  if (!o.degrees.empty()) return o.degrees;
  if (p.is_infinite()) return {8, 16, 32};
  return {8, 16, 32, 64};
}

Command converge_command(const Options& o) {
  const PNorm p = parse_pnorm(o.p);
  const std::vector<int> degrees = table_degrees(o, p);
  const ExtrapolationMethod method = parse_extrapolation(o.method);
  Json params = merged(spec_echo(o), {{"p", pnorm_to_json(p)},
                                      {"degrees", degrees},
                                      {"method", to_string(method)},
                                      {"parallel", !o.serial}});
  params = merged(params, grid_echo(o));
  return {params, [o, p, degrees, method] {
            TableOptions options;
            options.grid = grid_options(o);
            options.method = method;
            options.parallel = !o.serial;
            const ConvergenceReport report = scaled_error_table(spec_of(o), p, degrees, options);
            Outcome out;
            out.result = to_json(report);
            out.csv = to_csv(report);
            std::ostringstream plain;
            for (const auto& row : report.rows) {
              plain << "n = " << row.n << "  error = " << text(row.error) << "  scaled = " << text(row.scaled)
                    << (row.converged ? "" : "  (not converged)") << '\n';
            }
            if (report.limit) plain << "limit = " << text(report.limit->value) << (report.limit->stable ? "" : " (unstable)") << '\n';
            if (report.reference) plain << "reference = " << text(report.reference->value) << '\n';
            if (report.relative_gap) plain << "relative_gap = " << text(*report.relative_gap) << '\n';
            if (report.partial) plain << "partial: " << report.failure << '\n';
            out.plain = plain.str();
            const bool all_converged =
                std::all_of(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.converged; });
            if (report.partial && report.failure_kind && is_usage_error(*report.failure_kind)) {
              out.code = kExitUsage;
            } else {
              out.code = (report.partial || !all_converged) ? kExitNumerical : kExitOk;
            }
            return out;
          }};
}

Command mu_command(const Options& o) {
  return {Json{{"tol", o.tol}}, [o] {
            const double mu = mu_constant(o.tol);
            Outcome out;
            out.result = {{"value", mu}, {"residual", std::abs(mu_equation(mu))}};
            out.csv = key_value_csv(out.result);
            out.plain = key_value_plain(out.result);
            return out;
          }};
}

std::vector<int> bound_degrees(const Options& o) {
  if (!o.degrees.empty()) return o.degrees;
  std::vector<int> ns;
  for (int n = 4; n <= 20; ++n) ns.push_back(n);
  return ns;
}

Command bound_command(const Options& o) {
  const DecayTestFunction fn = parse_decay_function(o.function);
  const std::vector<int> degrees = bound_degrees(o);
  Json params = {{"function", to_string(fn)}, {"sigma", o.sigma}, {"tau", o.tau}, {"C", o.C}, {"degrees", degrees}};
  return {params, [o, fn, degrees] {
            const DecayBoundReport report = decay_bound_check(fn, o.sigma, o.tau, o.C, degrees);
            Outcome out;
            out.result = to_json(report);
            std::string csv = "n,half_width,error,bound,margin,pass\n";
            std::ostringstream plain;
            plain << "C7 = " << text(report.params.C7) << "  C8 = " << text(report.params.C8) << '\n';
            for (const auto& row : report.rows) {
              csv += std::to_string(row.n) + ',' + text(row.half_width) + ',' + text(row.error) + ',' + text(row.bound) +
                     ',' + text(row.margin) + ',' + (row.pass ? "true" : "false") + '\n';
              plain << "n = " << row.n << "  error = " << text(row.error) << "  bound = " << text(row.bound)
                    << (row.pass ? "  ok" : "  VIOLATED") << '\n';
            }
            plain << (report.pass ? "pass" : "fail") << '\n';
            out.csv = std::move(csv);
            out.plain = plain.str();
            out.code = report.pass ? kExitOk : kExitNumerical;
            return out;
          }};
}

Command scaling_command(const Options& o) {
  const PNorm p = parse_pnorm(o.p);
  Json params = merged(spec_echo(o), {{"p", pnorm_to_json(p)},
                                      {"degree", o.degree},
                                      {"eta", o.eta},
                                      {"half_width", o.half_width}});
  params = merged(params, grid_echo(o));
  return {params, [o, p] {
            const ScalingReport report =
                scaling_identity_check(spec_of(o), p, o.degree, o.eta, o.half_width, grid_options(o));
            Outcome out;
            out.result = to_json(report);
            out.csv = key_value_csv(out.result);
            out.plain = key_value_plain(out.result);
            return out;
          }};
}

// ---------------------------------------------------------------------------
// Option wiring
// ---------------------------------------------------------------------------

void add_spec_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha", o.alpha, "Power exponent alpha")->capture_default_str();
  cmd->add_option("--beta", o.beta, "Log-oscillation frequency beta")->capture_default_str();
  cmd->add_option("--variant", o.variant, "full, cos or sin")->capture_default_str();
}

void add_grid_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid-floor", o.grid_floor, "Innermost panel edge, relative to the half-width")
      ->capture_default_str();
  cmd->add_option("--nodes-per-panel", o.nodes_per_panel, "Gauss nodes per panel")->capture_default_str();
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  cmd->add_option("--output", o.output, "Write the report to this file instead of stdout");
}

std::string render(const std::string& name, const Json& params, const Options& o, const Outcome* outcome,
                   const Error* failure) {
  if (o.format == "json") {
    Json doc;
    doc["command"] = name;
    doc["parameters"] = params;
    if (outcome != nullptr) doc["result"] = outcome->result;
    if (failure != nullptr) doc["error"] = {{"kind", to_string(failure->kind())}, {"message", failure->what()}};
    return doc.dump(2) + '\n';
  }
  std::string out = "# command = " + name + '\n';
  for (const auto& [key, value] : params.items()) out += "# " + key + " = " + value.dump() + '\n';
  if (failure != nullptr) return out + "# error = " + to_string(failure->kind()) + ": " + failure->what() + '\n';
  return out + (o.format == "csv" ? outcome->csv : outcome->plain);
}

// Flags as typed, for failures that happen before parameters are understood.
Json raw_echo(const CLI::App& cmd) {
  Json echo = Json::object();
  for (const CLI::Option* opt : cmd.get_options()) {
    if (opt->count() == 0 || opt->get_lnames().empty()) continue;
    std::string joined;
    for (const auto& r : opt->results()) joined += (joined.empty() ? "" : ",") + r;
    echo[opt->get_lnames().front()] = joined;
  }
  return echo;
}

int emit(const std::string& body, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.output.empty()) {
    out << body;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << o.output << "' for writing\n";
    return kExitUsage;
  }
  file << body;
  return file ? kExitOk : kExitUsage;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Best polynomial approximation of |x|^(alpha + i beta) and its Bernstein constants", "bernlab"};
  app.require_subcommand(1);

  auto* constant = app.add_subcommand("constant", "Closed-form Bernstein constant for p = 1, 2 or inf");
  add_spec_options(constant, o);
  constant->add_option("--p", o.p, "1, 2 or inf")->capture_default_str();
  constant->add_option("--sigma", o.sigma, "Exponential type (p = inf only)")->capture_default_str();
  add_output_options(constant, o);

  auto* error = app.add_subcommand("error", "Best approximation error E_n on [-a, a]");
  add_spec_options(error, o);
  error->add_option("--p", o.p, "1, 2, inf or a real p > 1")->capture_default_str();
  error->add_option("--degree", o.degree, "Polynomial degree n")->capture_default_str();
  error->add_option("--half-width", o.half_width, "Interval half-width a")->capture_default_str();
  add_grid_options(error, o);
  add_output_options(error, o);

  auto* converge = app.add_subcommand("converge", "Scaled error table with extrapolated limit");
  add_spec_options(converge, o);
  converge->add_option("--p", o.p, "1, 2, inf or a real p > 1")->capture_default_str();
  converge->add_option("--degrees", o.degrees, "Comma-separated degrees (default 8,16,32,64; 8,16,32 for inf)")
      ->delimiter(',');
  converge->add_option("--method", o.method, "richardson_1overN or aitken")->capture_default_str();
  converge->add_flag("--serial", o.serial, "Solve rows one after another");
  add_grid_options(converge, o);
  add_output_options(converge, o);

  auto* mu = app.add_subcommand("mu", "Root of sqrt(x^2 + 1) / x = log(sqrt(x^2 + 1) + x)");
  mu->add_option("--tol", o.tol, "Root tolerance, at most 1e-6")->capture_default_str();
  add_output_options(mu, o);

  auto* bound = app.add_subcommand("bound-check", "Exponential decay bound for band-limited test functions");
  bound->add_option("--function", o.function, "cosine, sinc_power or constant")->capture_default_str();
  bound->add_option("--sigma", o.sigma, "Exponential type sigma")->capture_default_str();
  bound->add_option("--tau", o.tau, "tau in (0, 1)")->capture_default_str();
  bound->add_option("--C", o.C, "Degree offset bound C")->capture_default_str();
  bound->add_option("--degrees", o.degrees, "Comma-separated degrees (default 4..20)")->delimiter(',');
  add_output_options(bound, o);

  auto* scaling = app.add_subcommand("scaling-check", "Both sides of the dilation scaling identity");
  add_spec_options(scaling, o);
  scaling->add_option("--p", o.p, "1, 2, inf or a real p > 1")->capture_default_str();
  scaling->add_option("--degree", o.degree, "Polynomial degree n")->capture_default_str();
  scaling->add_option("--eta", o.eta, "Dilation eta != 0")->capture_default_str();
  scaling->add_option("--half-width", o.half_width, "Interval half-width a")->capture_default_str();
  add_grid_options(scaling, o);
  add_output_options(scaling, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Command command;
  try {
    if (chosen == constant) command = constant_command(o);
    else if (chosen == error) command = error_command(o);
    else if (chosen == converge) command = converge_command(o);
    else if (chosen == mu) command = mu_command(o);
    else if (chosen == bound) command = bound_command(o);
    else command = scaling_command(o);
  } catch (const Error& e) {
    // Parameters that cannot even be echoed (bad p, unknown variant).
    err << "error: " << e.what() << '\n';
    if (o.format == "json") emit(render(name, raw_echo(*chosen), o, nullptr, &e), o, out, err);
    return kExitUsage;
  }

  try {
    const Outcome outcome = command.execute();
    const int written = emit(render(name, command.parameters, o, &outcome, nullptr), o, out, err);
    return written != kExitOk ? written : outcome.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (o.format == "json") emit(render(name, command.parameters, o, nullptr, &e), o, out, err);
    return is_usage_error(e.kind()) ? kExitUsage : kExitNumerical;
  }
}

}  // namespace bernlab::cli
