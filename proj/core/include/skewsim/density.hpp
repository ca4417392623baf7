#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace skewsim {

enum class DensityKind { Semicircle, McKay };

/// Analytic limiting spectral law: the standard semicircle (support [-2,2])
/// or the Kesten-McKay law of degree d (support [-2*sqrt(d-1), 2*sqrt(d-1)],
/// the arcsine law at d = 2).
class DensityModel {
 public:
  static DensityModel semicircle() { return DensityModel(DensityKind::Semicircle, 0); }
  /// d >= 2, else ParameterError.
  static DensityModel mckay(int d);

  DensityKind kind() const noexcept { return kind_; }
  int degree() const noexcept { return d_; }
  double support_min() const;
  double support_max() const;

 private:
  DensityModel(DensityKind kind, int d) : kind_(kind), d_(d) {}
  DensityKind kind_;
  int d_;
};

/// Density at x; zero outside the (closed) support. Semicircle:
/// sqrt(4-x^2)/(2*pi). McKay: d*sqrt(4(d-1)-x^2) / (2*pi*(d^2-x^2)).
/// Support endpoints evaluate to 0 (the d=2 arcsine density diverges there;
/// the endpoint is a measure-zero convention).
double pdf(const DensityModel& model, double x);

/// Distribution function, clamped to [0,1]. The semicircle uses the closed
/// antiderivative 1/2 + x*sqrt(4-x^2)/(4*pi) + asin(x/2)/pi. McKay
/// integrates the density by adaptive Gauss-Kronrod quadrature under the
/// substitution x = 2*sqrt(d-1)*sin(theta), which removes the d=2 endpoint
/// singularity. Throws NumericError if the quadrature cannot reach its
/// tolerance.
double cdf(const DensityModel& model, double x);

/// k-th moment, exact integer combinatorics converted to double at the
/// boundary. Odd k vanish. Semicircle: Catalan(k/2). McKay: closed walks of
/// length k from the root of the infinite d-regular tree.
double moment(const DensityModel& model, int k);

/// Mean absolute value  integral |x| * pdf(x) dx.  Semicircle: 8/(3*pi).
/// McKay: 2d*sqrt(d-1)/pi - d(d-2)/pi * arctan(2*sqrt(d-1)/(d-2)) for d >= 3;
/// the arctan term vanishes in the d = 2 limit, giving 4/pi.
double energy_constant(const DensityModel& model);

/// Catalan number (1/(m+1)) * binom(2m, m), exact. m >= 0.
boost::multiprecision::cpp_int catalan_number(int m);

/// Closed walks of length k that start and end at the root of the infinite
/// d-regular tree, exact (dynamic programming over depth). Zero for odd k.
boost::multiprecision::cpp_int tree_walk_count(int d, int k);

}  // namespace skewsim
