#include "skewsim/density.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "skewsim/errors.hpp"

namespace skewsim {

namespace {

constexpr double kPi = std::numbers::pi;

double mckay_cdf_quadrature(int d, double x) {
  // Substitution x = 2*sqrt(d-1)*sin(theta): the integrand becomes
  //   2 d (d-1) cos^2(theta) / (pi (d^2 - 4(d-1) sin^2(theta)))
  // which is smooth on [-pi/2, pi/2]; at d = 2 it is identically 1/pi, so
  // the arcsine endpoint singularity disappears. The denominator is
  // evaluated as (d-2)^2 + 4(d-1) cos^2(theta), which keeps the endpoint
  // cancellation against the cos^2 numerator exact in floating point.
  const double radius = 2.0 * std::sqrt(static_cast<double>(d) - 1.0);
  const double s = std::fmin(1.0, std::fmax(-1.0, x / radius));
  const double theta = std::asin(s);
  const double dd = static_cast<double>(d);
  auto integrand = [dd](double t) {
    const double c = std::cos(t);
    return 2.0 * dd * (dd - 1.0) * c * c /
           (kPi * ((dd - 2.0) * (dd - 2.0) + 4.0 * (dd - 1.0) * c * c));
  };

  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, -kPi / 2.0, theta, 12, 1e-12, &error);
  if (error > 1e-9)
    throw NumericError("McKay cdf quadrature error " + std::to_string(error) +
                       " exceeds tolerance (d=" + std::to_string(d) + ")");
  return value;
}

}  // namespace

DensityModel DensityModel::mckay(int d) {
  if (d < 2) throw ParameterError("McKay law requires degree d >= 2");
  return DensityModel(DensityKind::McKay, d);
}

double DensityModel::support_min() const { return -support_max(); }

double DensityModel::support_max() const {
  if (kind_ == DensityKind::Semicircle) return 2.0;
  return 2.0 * std::sqrt(static_cast<double>(d_) - 1.0);
}

double pdf(const DensityModel& model, double x) {
  if (model.kind() == DensityKind::Semicircle) {
    if (std::fabs(x) >= 2.0) return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * kPi);
  }
  const double d = static_cast<double>(model.degree());
  const double radius = 2.0 * std::sqrt(d - 1.0);
  if (std::fabs(x) >= radius) return 0.0;
  return d * std::sqrt(4.0 * (d - 1.0) - x * x) / (2.0 * kPi * (d * d - x * x));
}

double cdf(const DensityModel& model, double x) {
  if (x <= model.support_min()) return 0.0;
  if (x >= model.support_max()) return 1.0;
  double value;
  if (model.kind() == DensityKind::Semicircle) {
    value = 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(x / 2.0) / kPi;
  } else {
    value = mckay_cdf_quadrature(model.degree(), x);
  }
  return std::fmin(1.0, std::fmax(0.0, value));
}

boost::multiprecision::cpp_int catalan_number(int m) {
  if (m < 0) throw ParameterError("Catalan number index must be nonnegative");
  boost::multiprecision::cpp_int c = 1;
  for (int j = 1; j <= m; ++j) {
    c *= 2 * (2 * j - 1);
    c /= j + 1;  // exact: C_j = C_{j-1} * 2(2j-1)/(j+1)
  }
  return c;
}

boost::multiprecision::cpp_int tree_walk_count(int d, int k) {
  if (d < 1) throw ParameterError("tree degree must be positive");
  if (k < 0) throw ParameterError("walk length must be nonnegative");
  if (k % 2 == 1) return 0;

  using boost::multiprecision::cpp_int;
  // ways[r] = walks of the first `step` edges ending at depth r. The root
  // offers d forward moves, deeper nodes d-1 forward and one backward.
  std::vector<cpp_int> ways(static_cast<std::size_t>(k / 2 + 2), 0);
  ways[0] = 1;
  for (int step = 1; step <= k; ++step) {
    std::vector<cpp_int> next(ways.size(), 0);
    const int max_depth = std::min(step, k - step);  // must return to 0 in time
    for (int r = 0; r < static_cast<int>(ways.size()); ++r) {
      if (ways[static_cast<std::size_t>(r)] == 0) continue;
      const cpp_int& w = ways[static_cast<std::size_t>(r)];
      if (r + 1 <= max_depth)
        next[static_cast<std::size_t>(r) + 1] += w * (r == 0 ? d : d - 1);
      if (r > 0) next[static_cast<std::size_t>(r) - 1] += w;
    }
    ways = std::move(next);
  }
  return ways[0];
}

double moment(const DensityModel& model, int k) {
  if (k < 0) throw ParameterError("moment order must be nonnegative");
  if (k % 2 == 1) return 0.0;
  if (model.kind() == DensityKind::Semicircle)
    return catalan_number(k / 2).convert_to<double>();
  return tree_walk_count(model.degree(), k).convert_to<double>();
}

double energy_constant(const DensityModel& model) {
  if (model.kind() == DensityKind::Semicircle) return 8.0 / (3.0 * kPi);
  const int d = model.degree();
  if (d == 2) return 4.0 / kPi;  // limit: the arctan term vanishes
  const double dd = static_cast<double>(d);
  return 2.0 * dd * std::sqrt(dd - 1.0) / kPi -
         dd * (dd - 2.0) / kPi * std::atan(2.0 * std::sqrt(dd - 1.0) / (dd - 2.0));
}

}  // namespace skewsim
