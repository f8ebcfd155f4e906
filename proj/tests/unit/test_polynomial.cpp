#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bernlab/error.hpp"
#include "bernlab/polynomial.hpp"

using namespace bernlab;
using cd = std::complex<double>;

namespace {

std::vector<cd> random_coeffs(int degree, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> c(degree + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return c;
}

double max_abs(std::span<const cd> c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

// |monomial coefficient k of T_j|, from T_{j+1} = 2t T_j - T_{j-1}.
std::vector<std::vector<long double>> chebyshev_in_monomials(int n) {
  std::vector<std::vector<long double>> t(n + 1, std::vector<long double>(n + 2, 0.0L));
  t[0][0] = 1.0L;
  if (n >= 1) t[1][1] = 1.0L;
  for (int j = 1; j < n; ++j) {
    for (int k = 0; k <= j; ++k) t[j + 1][k + 1] += 2.0L * t[j][k];
    for (int k = 0; k < j; ++k) t[j + 1][k] -= t[j - 1][k];
  }
  for (auto& row : t) for (auto& x : row) x = std::abs(x);
  return t;
}

// Chebyshev coefficient j of t^k: 2^(1-k) C(k, (k-j)/2), halved for j = 0.
std::vector<std::vector<long double>> monomials_in_chebyshev(int n) {
  std::vector<std::vector<long double>> x(n + 1, std::vector<long double>(n + 1, 0.0L));
  for (int k = 0; k <= n; ++k) {
    for (int j = k % 2; j <= k; j += 2) {
      const long double binom = std::exp(std::lgamma(k + 1.0L) - std::lgamma((k - j) / 2 + 1.0L) -
                                         std::lgamma((k + j) / 2 + 1.0L));
      x[k][j] = std::pow(2.0L, 1 - k) * binom * (j == 0 ? 0.5L : 1.0L);
    }
  }
  return x;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("evaluation examples") {
    CHECK(poly_eval(Polynomial(Basis::chebyshev, {0.0, 0.0, 1.0}), 0.5).real() == doctest::Approx(-0.5));
    CHECK(poly_eval(Polynomial(Basis::monomial, {1.0}), 123.0).real() == 1.0);
    CHECK(poly_eval(Polynomial(Basis::monomial, {0.0, 1.0}), std::numbers::pi).real() ==
          doctest::Approx(std::numbers::pi));
  }

  TEST_CASE("Clenshaw matches the cosine definition of T_k") {
    std::vector<double> c{0.3, -1.2, 0.5, 2.0, -0.7};
    for (double t : {-0.95, -0.2, 0.0, 0.4, 1.0}) {
      double direct = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) direct += c[k] * std::cos(k * std::acos(t));
      CHECK(clenshaw<double>(c, t) == doctest::Approx(direct).epsilon(1e-14));
    }
  }

  TEST_CASE("reference interval maps x to t") {
    const Polynomial p(Basis::monomial, {0.0, 1.0}, {2.0, 6.0});
    CHECK(p.normalized(4.0) == 0.0);
    CHECK(p(6.0).real() == doctest::Approx(1.0));
    CHECK(p(2.0).real() == doctest::Approx(-1.0));
  }

  TEST_CASE("to_monomial examples") {
    const Polynomial t2 = to_monomial(Polynomial(Basis::chebyshev, {0.0, 0.0, 1.0}));
    CHECK(t2.basis() == Basis::monomial);
    CHECK(t2.coeffs()[0].real() == doctest::Approx(-1.0));
    CHECK(t2.coeffs()[1].real() == doctest::Approx(0.0));
    CHECK(t2.coeffs()[2].real() == doctest::Approx(2.0));

    const Polynomial five = to_monomial(Polynomial(Basis::chebyshev, {5.0}));
    CHECK(five.degree() == 0);
    CHECK(five.coeffs()[0].real() == 5.0);

    const Polynomial t3 = to_monomial(Polynomial(Basis::chebyshev, {0.0, 0.0, 0.0, 1.0}));
    CHECK(t3.coeffs()[0].real() == doctest::Approx(0.0));
    CHECK(t3.coeffs()[1].real() == doctest::Approx(-3.0));
    CHECK(t3.coeffs()[2].real() == doctest::Approx(0.0));
    CHECK(t3.coeffs()[3].real() == doctest::Approx(4.0));
  }

  TEST_CASE("degree limit for conversions") {
    std::vector<cd> c(66, cd(1.0));
    try {
      to_monomial(Polynomial(Basis::chebyshev, c));
      FAIL("degree 65 accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::degree_too_large);
    }
  }

  // Both round trips store the intermediate coefficients in double, and that
  // rounding is amplified by the change of basis. The tolerance is the a-priori
  // bound eps * sum |intermediate_j| |map_jk| on top of a 1e-12 relative floor.
  TEST_CASE("monomial -> Chebyshev -> monomial round trip, degree <= 64") {
    std::mt19937 rng(7);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int n : {1, 4, 8, 16, 32, 64}) {
      const Polynomial m(Basis::monomial, random_coeffs(n, rng));
      const Polynomial cheb = to_chebyshev(m);
      const Polynomial back = to_monomial(cheb);
      const auto t = chebyshev_in_monomials(n);
      const double scale = max_abs(m.coeffs());
      INFO("n=" << n);
      for (int k = 0; k <= n; ++k) {
        long double amplified = 0.0L;
        for (int j = k; j <= n; ++j) amplified += std::abs(cheb.coeffs()[j]) * t[j][k];
        const double tol = 1e-12 * scale + 2.0 * eps * static_cast<double>(amplified);
        CHECK(std::abs(back.coeffs()[k] - m.coeffs()[k]) <= tol);
      }
    }
  }

  TEST_CASE("monomial round trip is exact to 1e-12 at low degree") {
    std::mt19937 rng(3);
    for (int n : {1, 2, 4, 8}) {
      const Polynomial m(Basis::monomial, random_coeffs(n, rng));
      const Polynomial back = to_monomial(to_chebyshev(m));
      const double scale = max_abs(m.coeffs());
      for (int k = 0; k <= n; ++k) CHECK(std::abs(back.coeffs()[k] - m.coeffs()[k]) <= 1e-12 * scale);
    }
  }

  TEST_CASE("Chebyshev -> monomial -> Chebyshev round trip, degree <= 64") {
    std::mt19937 rng(11);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int n : {2, 4, 8, 16, 32, 64}) {
      const Polynomial c(Basis::chebyshev, random_coeffs(n, rng));
      const Polynomial mono = to_monomial(c);
      const Polynomial back = to_chebyshev(mono);
      const auto x = monomials_in_chebyshev(n);
      const double scale = max_abs(c.coeffs());
      INFO("n=" << n);
      for (int j = 0; j <= n; ++j) {
        long double amplified = 0.0L;
        for (int k = j; k <= n; ++k) amplified += std::abs(mono.coeffs()[k]) * x[k][j];
        const double tol = 1e-12 * scale + 2.0 * eps * static_cast<double>(amplified);
        CHECK(std::abs(back.coeffs()[j] - c.coeffs()[j]) <= tol);
      }
    }
  }

  TEST_CASE("Chebyshev interpolant reproduces polynomials") {
    const auto f = [](double x) { return cd(3.0 * x * x * x - x + 0.5, x * x); };
    const Polynomial p = chebyshev_interpolant(f, 5);
    for (double x : {-1.0, -0.3, 0.2, 0.9}) CHECK(std::abs(p(x) - f(x)) < 1e-14);
    CHECK(std::abs(p.coeffs()[4]) < 1e-15);
    CHECK(std::abs(p.coeffs()[5]) < 1e-15);
  }

  TEST_CASE("coefficient bound examples") {
    const CoefficientBoundReport t3 = coeff_bound_check(Polynomial(Basis::chebyshev, {0.0, 0.0, 0.0, 1.0}), 1.0);
    CHECK(t3.pass);
    CHECK(t3.rows[1].magnitude == doctest::Approx(3.0));
    CHECK(t3.rows[1].bound == doctest::Approx(3.0));
    CHECK(t3.rows[3].magnitude == doctest::Approx(4.0));
    CHECK(t3.rows[3].bound == doctest::Approx(4.5));

    CHECK(coeff_bound_check(Polynomial(Basis::monomial, {1.0}), 1.0).pass);

    const CoefficientBoundReport x4 = coeff_bound_check(Polynomial(Basis::monomial, {0.0, 0.0, 0.0, 0.0, 1.0}), 1.0);
    CHECK(x4.pass);
    CHECK(x4.rows[4].bound == doctest::Approx(256.0 / 24.0));

    // 10 x has sup norm 10 but not 1.
    CHECK_FALSE(coeff_bound_check(Polynomial(Basis::monomial, {0.0, 10.0}), 1.0).pass);
    CHECK_THROWS_AS(coeff_bound_check(Polynomial(Basis::monomial, {1.0}, {0.0, 1.0}), 1.0), Error);
  }

  TEST_CASE("Chebyshev polynomials meet the bound for every degree") {
    for (int n = 1; n <= 30; ++n) {
      std::vector<cd> c(n + 1, cd(0.0));
      c[n] = 1.0;
      CHECK(coeff_bound_check(Polynomial(Basis::chebyshev, c), 1.0).pass);
    }
  }

  TEST_CASE("grid sup norm") {
    CHECK(grid_sup_norm(Polynomial(Basis::chebyshev, {0.0, 0.0, 0.0, 0.0, 0.0, 1.0})) == doctest::Approx(1.0));
    CHECK(grid_sup_norm(Polynomial(Basis::monomial, {0.0, 2.0})) == doctest::Approx(2.0));
  }

  TEST_CASE("basis names") {
    CHECK(parse_basis(to_string(Basis::chebyshev)) == Basis::chebyshev);
    CHECK(parse_basis(to_string(Basis::monomial)) == Basis::monomial);
    CHECK_THROWS_AS(parse_basis("legendre"), Error);
  }
}
