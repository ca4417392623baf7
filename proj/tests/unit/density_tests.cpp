#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "skewsim/density.hpp"
#include "skewsim/errors.hpp"
#include "test_oracles.hpp"

using namespace skewsim;
using test_oracles::adaptive_simpson;

namespace {

constexpr double kPi = std::numbers::pi;

// Quadrature oracles under the substitution x = 2*sqrt(d-1)*sin(theta);
// the substituted integrand is smooth, including the d=2 arcsine case.
// The denominator form (d-2)^2 + 4(d-1)cos^2 keeps the endpoint
// cancellation exact (Simpson evaluates the endpoints).
double mckay_integrand_theta(int d, int k, double t) {
  const double dd = d;
  const double radius = 2.0 * std::sqrt(dd - 1.0);
  const double x = radius * std::sin(t);
  const double c = std::cos(t);
  double xk = 1.0;
  for (int i = 0; i < k; ++i) xk *= x;
  return xk * 2.0 * dd * (dd - 1.0) * c * c /
         (kPi * ((dd - 2.0) * (dd - 2.0) + 4.0 * (dd - 1.0) * c * c));
}

double mckay_integral_theta(int d, int k) {
  auto f = [d, k](double t) { return mckay_integrand_theta(d, k, t); };
  return adaptive_simpson(f, -kPi / 2.0, kPi / 2.0, 1e-11);
}

double mckay_abs_integral(int d) {
  auto f = [d](double t) { return mckay_integrand_theta(d, 1, t); };
  return 2.0 * adaptive_simpson(f, 0.0, kPi / 2.0, 1e-11);
}

// Semicircle moments under x = 2*sin(theta): sqrt(4-x^2) = 2*cos(theta),
// so the integrand is the trigonometric polynomial (2 sin)^k (2/pi) cos^2
// and Simpson converges fast (no endpoint derivative singularity).
double semicircle_integrand_theta(int k, double t) {
  const double x = 2.0 * std::sin(t);
  const double c = std::cos(t);
  double xk = 1.0;
  for (int i = 0; i < k; ++i) xk *= x;
  return xk * 2.0 * c * c / kPi;
}

double semicircle_integral(int k) {
  auto f = [k](double t) { return semicircle_integrand_theta(k, t); };
  return adaptive_simpson(f, -kPi / 2.0, kPi / 2.0, 1e-11);
}

}  // namespace

TEST_CASE("model construction and support") {
  CHECK_THROWS_AS(DensityModel::mckay(1), ParameterError);
  CHECK_THROWS_AS(DensityModel::mckay(0), ParameterError);
  CHECK(DensityModel::semicircle().support_max() == 2.0);
  CHECK(DensityModel::mckay(3).support_max() == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(DensityModel::mckay(2).support_max() == 2.0);
}

TEST_CASE("pdf point values") {
  const DensityModel sc = DensityModel::semicircle();
  CHECK(pdf(sc, 0.0) == doctest::Approx(0.318309886183790672).epsilon(1e-14));  // 1/pi
  CHECK(pdf(sc, 2.0) == 0.0);
  CHECK(pdf(sc, -2.0) == 0.0);
  CHECK(pdf(sc, 2.5) == 0.0);
  CHECK(pdf(sc, -7.0) == 0.0);

  const DensityModel m3 = DensityModel::mckay(3);
  CHECK(pdf(m3, 0.0) == doctest::Approx(0.150052719359517678).epsilon(1e-14));  // sqrt(8)/(6 pi)
  CHECK(pdf(m3, 3.0) == 0.0);  // outside support 2*sqrt(2)
  CHECK(pdf(m3, 2.0 * std::sqrt(2.0)) == 0.0);
}

TEST_CASE("mckay d=2 is the arcsine density") {
  const DensityModel m2 = DensityModel::mckay(2);
  for (double x = -1.99; x <= 1.99; x += 0.01) {
    const double arcsine = 1.0 / (kPi * std::sqrt(4.0 - x * x));
    CHECK(std::fabs(pdf(m2, x) - arcsine) <= 1e-12);
  }
}

TEST_CASE("cdf point values") {
  const DensityModel sc = DensityModel::semicircle();
  CHECK(cdf(sc, 0.0) == 0.5);
  CHECK(cdf(sc, 2.0) == 1.0);
  CHECK(cdf(sc, -2.0) == 0.0);
  CHECK(cdf(sc, 5.0) == 1.0);
  CHECK(cdf(sc, 1.0) == doctest::Approx(0.804498890522114679).epsilon(1e-14));

  // Arcsine closed form: cdf = 1/2 + asin(x/2)/pi, so cdf(sqrt(2)) = 3/4.
  const DensityModel m2 = DensityModel::mckay(2);
  CHECK(cdf(m2, std::sqrt(2.0)) == doctest::Approx(0.75).epsilon(1e-9));
  for (double x : {-1.5, -0.3, 0.9, 1.7})
    CHECK(cdf(m2, x) == doctest::Approx(0.5 + std::asin(x / 2.0) / kPi).epsilon(1e-9));
}

TEST_CASE("cdf is a distribution function") {
  for (int d : {0, 2, 3, 4, 10, 50}) {  // 0 stands for the semicircle
    const DensityModel model = d == 0 ? DensityModel::semicircle() : DensityModel::mckay(d);
    CAPTURE(d);
    CHECK(std::fabs(cdf(model, model.support_min())) <= 1e-8);
    CHECK(std::fabs(cdf(model, model.support_max()) - 1.0) <= 1e-8);
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      const double x =
          model.support_min() + (model.support_max() - model.support_min()) * i / 1000.0;
      const double f = cdf(model, x);
      CHECK(f >= prev);
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
      prev = f;
    }
  }
}

TEST_CASE("densities integrate to one") {
  CHECK(std::fabs(semicircle_integral(0) - 1.0) <= 1e-8);
  for (int d : {2, 3, 4, 10, 50}) {
    CAPTURE(d);
    CHECK(std::fabs(mckay_integral_theta(d, 0) - 1.0) <= 1e-8);
  }
}

TEST_CASE("catalan numbers") {
  const std::int64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int m = 0; m <= 7; ++m)
    CHECK(catalan_number(m).convert_to<std::int64_t>() == expected[m]);
  // (1/(m+1)) binom(2m, m) at m = 20, against a direct product formula.
  CHECK(catalan_number(20).convert_to<double>() == doctest::Approx(6564120420.0));
}

TEST_CASE("tree walk counts") {
  // d = 2 (the infinite path): central binomial coefficients.
  const std::int64_t central[] = {1, 2, 6, 20, 70, 252};
  for (int half = 0; half <= 5; ++half)
    CHECK(tree_walk_count(2, 2 * half).convert_to<std::int64_t>() == central[half]);
  CHECK(tree_walk_count(3, 2).convert_to<std::int64_t>() == 3);
  CHECK(tree_walk_count(3, 4).convert_to<std::int64_t>() == 15);   // 2d^2 - d
  CHECK(tree_walk_count(5, 1).convert_to<std::int64_t>() == 0);
  CHECK(tree_walk_count(200, 4).convert_to<double>() == doctest::Approx(79800.0));
}

TEST_CASE("moments: odd vanish, even are walk counts") {
  const DensityModel sc = DensityModel::semicircle();
  CHECK(moment(sc, 4) == 2.0);  // Catalan C_2
  CHECK(moment(sc, 0) == 1.0);
  for (int k : {1, 3, 5, 9}) {
    CHECK(moment(sc, k) == 0.0);
    CHECK(moment(DensityModel::mckay(3), k) == 0.0);
  }
  CHECK(moment(DensityModel::mckay(2), 4) == 6.0);
  CHECK_THROWS_AS(moment(sc, -1), ParameterError);
}

TEST_CASE("moments agree with quadrature up to order 10") {
  for (int k = 0; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(std::fabs(moment(DensityModel::semicircle(), k) - semicircle_integral(k)) <= 1e-6);
    for (int d : {2, 3, 4}) {
      CAPTURE(d);
      CHECK(std::fabs(moment(DensityModel::mckay(d), k) - mckay_integral_theta(d, k)) <= 1e-6);
    }
  }
}

TEST_CASE("mckay renormalized moments approach catalan numbers") {
  // moment(McKay(d), 2m) / (d-1)^m -> C_m as d grows.
  const double m4 = moment(DensityModel::mckay(200), 4);
  CHECK(std::fabs(m4 / (199.0 * 199.0) - 2.0) <= 0.05);
}

TEST_CASE("energy constants") {
  CHECK(energy_constant(DensityModel::semicircle()) ==
        doctest::Approx(0.848826363156775124).epsilon(1e-15));  // 8/(3 pi)
  CHECK(energy_constant(DensityModel::mckay(2)) ==
        doctest::Approx(1.273239544735162686).epsilon(1e-15));  // 4/pi
  CHECK(energy_constant(DensityModel::mckay(3)) ==
        doctest::Approx(1.525469292379496398).epsilon(1e-12));

  // Closed forms vs the quadrature oracle.
  auto semicircle_abs = [] {
    return 2.0 * adaptive_simpson([](double t) { return semicircle_integrand_theta(1, t); },
                                  0.0, kPi / 2.0, 1e-11);
  };
  CHECK(std::fabs(energy_constant(DensityModel::semicircle()) - semicircle_abs()) <= 1e-8);
  for (int d : {2, 3, 4, 10, 50}) {
    CAPTURE(d);
    CHECK(std::fabs(energy_constant(DensityModel::mckay(d)) - mckay_abs_integral(d)) <= 1e-8);
  }
}

TEST_CASE("cdf derivative recovers the density") {
  const double h = 1e-6;
  for (double x : {-1.3, -0.4, 0.7, 1.6}) {
    const DensityModel sc = DensityModel::semicircle();
    CHECK(std::fabs((cdf(sc, x + h) - cdf(sc, x - h)) / (2.0 * h) - pdf(sc, x)) <= 1e-7);
    const DensityModel m3 = DensityModel::mckay(3);
    CHECK(std::fabs((cdf(m3, x + h) - cdf(m3, x - h)) / (2.0 * h) - pdf(m3, x)) <= 1e-7);
  }
}
