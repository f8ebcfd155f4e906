#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "bernlab/io.hpp"

using namespace bernlab;

TEST_SUITE("io") {
  TEST_CASE("p is a number or \"inf\"") {
    CHECK(pnorm_to_json(PNorm::infinity()) == "inf");
    CHECK(pnorm_to_json(PNorm(1.5)) == 1.5);
    CHECK(pnorm_from_json(Json("inf")) == PNorm::infinity());
    CHECK(pnorm_from_json(Json(2.0)) == PNorm(2.0));
    CHECK_THROWS_AS(pnorm_from_json(Json(true)), Error);
  }

  TEST_CASE("polynomial round trip") {
    const Polynomial p(Basis::chebyshev, {{0.1, -0.2}, {1.0 / 3.0, 0.0}, {-7e-17, 2.5}}, {-2.0, 2.0});
    const Polynomial back = polynomial_from_json(to_json(p));
    CHECK(back.basis() == p.basis());
    CHECK(back.interval() == p.interval());
    REQUIRE(back.coeffs().size() == p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) CHECK(back.coeffs()[i] == p.coeffs()[i]);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"basis":"chebyshev"})")), Error);
  }

  TEST_CASE("result JSON carries the contract fields and survives a text round trip") {
    const ApproxResult r = solve(ApproxProblem::for_spec(FunctionSpec(1.0, 0.0), 2, PNorm::infinity()));
    const Json j = to_json(r);
    for (const char* key : {"p", "n", "interval", "error", "converged", "discretized", "polynomial", "diagnostics"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["diagnostics"].contains("alternation"));
    const std::string text = j.dump(2);
    CHECK(Json::parse(text).dump(2) == text);
  }

  TEST_CASE("non-finite numbers become null") {
    ScalingReport r;
    r.discrepancy = std::numeric_limits<double>::quiet_NaN();
    CHECK(to_json(r)["discrepancy"].is_null());
  }

  TEST_CASE("constant JSON") {
    const Json j = to_json(bernstein_l1(1.0));
    CHECK(j["p"] == 1.0);
    CHECK(j["alpha"] == 1.0);
    CHECK(j["beta"] == 0.0);
    CHECK(j["provenance"] == "l1_series");
    CHECK(j["value"].get<double>() == doctest::Approx(2.4674011002723395));
  }

  TEST_CASE("CSV table") {
    const std::vector<int> ns{8, 16, 32};
    const ConvergenceReport report = scaled_error_table(FunctionSpec(0.5, 0.0), PNorm(2.0), ns);
    const std::string csv = to_csv(report);
    CHECK(csv.rfind("n,error,scaled,reference,gap\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find("\n8,") != std::string::npos);
  }

  TEST_CASE("shortest round-trip decimal text") {
    for (double x : {0.1, 1.0 / 3.0, 2.4674011002723395, 1e-300}) CHECK(std::stod(format_double(x)) == x);
  }
}
