#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bernlab/asymptotics.hpp"
#include "bernlab/best_approx.hpp"
#include "bernlab/constants.hpp"
#include "bernlab/polynomial.hpp"

namespace bernlab {

using Json = nlohmann::ordered_json;

/// p as a number, or the string "inf".
Json pnorm_to_json(const PNorm& p);
PNorm pnorm_from_json(const Json& value);

/// {basis, interval, degree, coeffs: [[re, im], ...]}
Json to_json(const Polynomial& poly);
Polynomial polynomial_from_json(const Json& value);

/// {p, n, interval, error, converged, discretized, polynomial, diagnostics}
Json to_json(const ApproxResult& result);

/// {p, alpha, beta, value, provenance}; telemetry follows the contract fields.
Json to_json(const BernsteinConstant& constant);

Json to_json(const FunctionSpec& spec);
Json to_json(const ConvergenceReport& report);
Json to_json(const SubsequencePlan& plan);
Json to_json(const ScalingReport& report);
Json to_json(const TransferReport& report);
Json to_json(const DecayBoundReport& report);

/// Header n,error,scaled,reference,gap; reference and gap are empty when absent.
std::string to_csv(const ConvergenceReport& report);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

}  // namespace bernlab
