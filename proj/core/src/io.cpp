#include "bernlab/io.hpp"

#include <charconv>
#include <cmath>

#include "bernlab/error.hpp"

namespace bernlab {

namespace {

// NaN and infinities have no JSON spelling; they become null.
Json number(double value) { return std::isfinite(value) ? Json(value) : Json(nullptr); }

Json interval_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buffer, end);
}

Json pnorm_to_json(const PNorm& p) { return p.is_infinite() ? Json("inf") : Json(p.p()); }

PNorm pnorm_from_json(const Json& value) {
  if (value.is_string()) return parse_pnorm(value.get<std::string>());
  if (value.is_number()) return PNorm(value.get<double>());
  raise(ErrorKind::domain, "p must be a number or \"inf\"");
}

Json to_json(const Polynomial& poly) {
  Json coeffs = Json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(Json::array({c.real(), c.imag()}));
  Json out;
  out["basis"] = to_string(poly.basis());
  out["interval"] = interval_json(poly.interval());
  out["degree"] = poly.degree();
  out["coeffs"] = std::move(coeffs);
  return out;
}

Polynomial polynomial_from_json(const Json& value) {
  try {
    const Basis basis = parse_basis(value.at("basis").get<std::string>());
    const auto& iv = value.at("interval");
    const Interval interval{iv.at(0).get<double>(), iv.at(1).get<double>()};
    std::vector<std::complex<double>> coeffs;
    for (const auto& pair : value.at("coeffs")) {
      coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    if (value.contains("degree") && value.at("degree").get<int>() + 1 != static_cast<int>(coeffs.size())) {
      raise(ErrorKind::domain, "polynomial degree does not match the coefficient count");
    }
    return Polynomial(basis, std::move(coeffs), interval);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::domain, std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const ApproxResult& result) {
  Json diagnostics;
  diagnostics["method"] = result.diagnostics.method;
  diagnostics["iterations"] = result.diagnostics.iterations;
  diagnostics["converged"] = result.diagnostics.converged;
  if (!result.diagnostics.alternation.empty()) {
    Json points = Json::array();
    for (const auto& a : result.diagnostics.alternation) points.push_back(Json::array({a.x, a.value}));
    diagnostics["alternation"] = std::move(points);
  }
  if (!result.diagnostics.sign_changes.empty() || result.pnorm == PNorm(1.0)) {
    diagnostics["sign_changes"] = result.diagnostics.sign_changes;
  }
  if (!std::isnan(result.diagnostics.peak_spread)) diagnostics["peak_spread"] = number(result.diagnostics.peak_spread);
  if (!std::isnan(result.diagnostics.lower_bound)) diagnostics["lower_bound"] = number(result.diagnostics.lower_bound);
  if (!std::isnan(result.diagnostics.pythagoras_error)) {
    diagnostics["pythagoras_error"] = number(result.diagnostics.pythagoras_error);
    diagnostics["direct_error"] = number(result.diagnostics.direct_error);
  }
  diagnostics["discretization_note"] = result.discretization_note;

  Json out;
  out["p"] = pnorm_to_json(result.pnorm);
  out["n"] = result.degree;
  out["interval"] = interval_json(result.interval);
  out["error"] = number(result.error);
  out["converged"] = result.diagnostics.converged;
  out["discretized"] = result.discretized;
  out["polynomial"] = to_json(result.polynomial);
  out["diagnostics"] = std::move(diagnostics);
  return out;
}

Json to_json(const BernsteinConstant& constant) {
  Json out;
  out["p"] = pnorm_to_json(constant.p);
  out["alpha"] = constant.alpha;
  out["beta"] = constant.beta;
  out["value"] = number(constant.value);
  out["provenance"] = to_string(constant.provenance);
  if (constant.series_terms_used > 0) out["series_terms_used"] = constant.series_terms_used;
  if (constant.tolerance > 0.0) out["tolerance"] = constant.tolerance;
  if (!constant.note.empty()) out["note"] = constant.note;
  return out;
}

Json to_json(const FunctionSpec& spec) {
  Json out;
  out["alpha"] = spec.alpha();
  out["beta"] = spec.beta();
  out["variant"] = to_string(spec.variant());
  if (!spec.has_unit_weights()) {
    const auto& w = spec.weights();
    out["halfline_weights"] = Json::array({Json::array({w.positive.real(), w.positive.imag()}),
                                          Json::array({w.negative.real(), w.negative.imag()})});
  }
  return out;
}

Json to_json(const ConvergenceReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["n"] = row.n;
    r["error"] = number(row.error);
    r["scaled"] = number(row.scaled);
    r["converged"] = row.converged;
    r["discretized"] = row.discretized;
    rows.push_back(std::move(r));
  }
  Json out;
  out["spec"] = to_json(report.spec);
  out["p"] = pnorm_to_json(report.p);
  out["rows"] = std::move(rows);
  if (report.limit) {
    out["limit_estimate"] = {{"value", number(report.limit->value)},
                             {"method", to_string(report.limit->method)},
                             {"stable", report.limit->stable}};
  } else {
    out["limit_estimate"] = nullptr;
  }
  out["reference"] = report.reference ? to_json(*report.reference) : Json(nullptr);
  out["relative_gap"] = report.relative_gap ? number(*report.relative_gap) : Json(nullptr);
  out["partial"] = report.partial;
  if (report.partial) {
    out["failure"] = {{"kind", report.failure_kind ? to_string(*report.failure_kind) : "Unknown"},
                      {"message", report.failure}};
  }
  return out;
}

Json to_json(const SubsequencePlan& plan) {
  Json out;
  out["beta"] = plan.beta;
  out["kind"] = to_string(plan.kind);
  out["ks"] = plan.ks;
  out["degrees"] = plan.degrees;
  out["dilations"] = plan.dilations;
  out["phase_residuals"] = phase_residuals(plan);
  return out;
}

Json to_json(const ScalingReport& report) {
  Json out;
  out["eta"] = report.eta;
  out["half_width"] = report.half_width;
  out["lhs"] = number(report.lhs);
  out["rhs"] = number(report.rhs);
  out["discrepancy"] = number(report.discrepancy);
  return out;
}

Json to_json(const TransferReport& report) {
  Json out;
  out["beta"] = report.beta;
  out["k"] = report.k;
  out["dilation"] = report.dilation;
  out["n"] = report.degree;
  out["error_unit"] = number(report.on_unit);
  out["error_dilated"] = number(report.on_dilated);
  out["discrepancy"] = number(report.discrepancy);
  return out;
}

Json to_json(const DecayBoundReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["n"] = row.n;
    r["half_width"] = row.half_width;
    r["error"] = number(row.error);
    r["bound"] = number(row.bound);
    r["margin"] = number(row.margin);
    r["converged"] = row.converged;
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
  }
  Json out;
  out["function"] = to_string(report.function);
  out["sigma"] = report.params.sigma;
  out["tau"] = report.params.tau;
  out["C"] = report.params.C;
  out["C7"] = report.params.C7;
  out["C8"] = report.params.C8;
  out["sup_norm"] = report.sup_norm;
  out["rows"] = std::move(rows);
  out["pass"] = report.pass;
  return out;
}

std::string to_csv(const ConvergenceReport& report) {
  std::string out = "n,error,scaled,reference,gap\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.n) + ',' + format_double(row.error) + ',' + format_double(row.scaled) + ',';
    if (report.reference) {
      out += format_double(report.reference->value) + ',' +
             format_double(std::abs(row.scaled - report.reference->value));
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

}  // namespace bernlab
