#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bernlab/error.hpp"
#include "bernlab/functions.hpp"

using namespace bernlab;

TEST_SUITE("functions") {
  TEST_CASE("even integer power is a polynomial") {
    const FunctionSpec f(2.0, 0.0);
    CHECK(f(-3.0).real() == doctest::Approx(9.0));
    CHECK(f(-3.0).imag() == 0.0);
    CHECK(f.is_polynomial());
    CHECK(f.is_even());
    CHECK(f.is_real_valued());
  }

  TEST_CASE("cos part at x = e^pi") {
    const FunctionSpec f(0.0, 1.0, Variant::cos_part);
    CHECK(f(std::exp(std::numbers::pi)).real() == doctest::Approx(-1.0).epsilon(1e-14));
  }

  TEST_CASE("full member against direct exp/log evaluation") {
    const FunctionSpec f(1.0, 2.0);
    const auto value = f(0.5);
    // 0.5 * exp(2i log 0.5)
    const double phase = 2.0 * std::log(0.5);
    CHECK(value.real() == doctest::Approx(0.5 * std::cos(phase)).epsilon(1e-15));
    CHECK(value.imag() == doctest::Approx(0.5 * std::sin(phase)).epsilon(1e-15));
    CHECK(value.real() == doctest::Approx(0.0917284873716508).epsilon(1e-13));
    CHECK(value.imag() == doctest::Approx(-0.4915138702056219).epsilon(1e-13));
  }

  TEST_CASE("origin has no value when alpha <= 0") {
    CHECK_THROWS_AS(FunctionSpec(0.0, 1.0)(0.0), Error);
    CHECK(FunctionSpec(0.5, 1.0)(0.0) == std::complex<double>(0.0, 0.0));
    try {
      FunctionSpec(0.0, 3.0)(0.0);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::domain);
    }
  }

  TEST_CASE("construction rejects alpha <= -1 and vanishing weights") {
    CHECK_THROWS_AS(FunctionSpec(-1.0, 0.0), Error);
    CHECK_THROWS_AS(FunctionSpec(0.5, 0.0, Variant::full, {{0.0, 0.0}, {0.0, 0.0}}), Error);
    CHECK_THROWS_AS(FunctionSpec(std::nan(""), 0.0), Error);
  }

  TEST_CASE("half-line weights (1, -1) give the signum variant") {
    const FunctionSpec f(1.0, 0.0, Variant::full, {{1.0, 0.0}, {-1.0, 0.0}});
    CHECK(f(0.3).real() == doctest::Approx(0.3));
    CHECK(f(-0.3).real() == doctest::Approx(-0.3));
    CHECK_FALSE(f.is_even());
    CHECK_FALSE(f.has_unit_weights());
  }

  TEST_CASE("sin part of a real power vanishes identically") {
    const FunctionSpec f(1.5, 0.0, Variant::sin_part);
    CHECK(f(0.7).real() == 0.0);
    CHECK(f.is_polynomial());
  }

  TEST_CASE("dilation examples") {
    const Dilation a = dilate(FunctionSpec(0.0, 1.0), std::exp(std::numbers::pi));
    CHECK(a.factor.modulus_factor == doctest::Approx(1.0));
    CHECK(a.mixing[0][0] == doctest::Approx(-1.0));
    CHECK(a.mixing[1][1] == doctest::Approx(-1.0));
    CHECK(std::abs(a.mixing[0][1]) < 1e-15);
    CHECK(std::abs(a.mixing[1][0]) < 1e-15);

    const Dilation b = dilate(FunctionSpec(1.0, 0.0), 2.0);
    CHECK(b.factor.modulus_factor == doctest::Approx(2.0));
    CHECK(b.factor.rotation == 0.0);

    const Dilation c = dilate(FunctionSpec(0.5, 2.0), 3.0);
    CHECK(c.factor.modulus_factor == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(c.factor.rotation == doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-15));

    CHECK_THROWS_AS(dilate(FunctionSpec(0.5, 2.0), 0.0), Error);
    CHECK_THROWS_AS(dilate(FunctionSpec(0.5, 2.0), -1.0), Error);
  }

  TEST_CASE("dilation factor reproduces f(eta x)") {
    const FunctionSpec f(0.7, -1.3);
    for (double eta : {0.3, 1.7, 4.0}) {
      const Dilation d = dilate(f, eta);
      for (double x : {-0.9, -0.01, 0.2, 0.75}) {
        const auto expected = f(eta * x);
        const auto got = d.full_factor * f(x);
        CHECK(std::abs(got - expected) <= 1e-14 * std::abs(expected));
      }
    }
  }

  TEST_CASE("dilation mixes cos and sin parts by the rotation") {
    const FunctionSpec fc(0.0, 2.5, Variant::cos_part);
    const FunctionSpec fs(0.0, 2.5, Variant::sin_part);
    const double eta = 1.9;
    const Dilation d = dilate(fc, eta);
    for (double x : {-0.8, 0.05, 0.6}) {
      const double c = fc(x).real();
      const double s = fs(x).real();
      CHECK(fc(eta * x).real() == doctest::Approx(d.mixing[0][0] * c + d.mixing[0][1] * s).epsilon(1e-13));
      CHECK(fs(eta * x).real() == doctest::Approx(d.mixing[1][0] * c + d.mixing[1][1] * s).epsilon(1e-13));
    }
  }

  TEST_CASE("variant names") {
    CHECK(parse_variant("cos") == Variant::cos_part);
    CHECK(parse_variant("sin") == Variant::sin_part);
    CHECK(to_string(Variant::full) == "full");
    CHECK_THROWS_AS(parse_variant("tan"), Error);
  }
}
