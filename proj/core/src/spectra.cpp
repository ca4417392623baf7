#include "skewsim/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewsim/errors.hpp"
#include "skewsim/symmetric_eigen.hpp"

namespace skewsim {

SkewAdjacency skew_adjacency(const OrientedGraph& g) {
  SkewAdjacency S;
  S.n = g.vertex_count();
  S.entries.assign(static_cast<std::size_t>(S.n) * S.n, 0.0);
  for (const Arc& a : g.arcs()) {
    S.entries[static_cast<std::size_t>(a.from) * S.n + a.to] = 1.0;
    S.entries[static_cast<std::size_t>(a.to) * S.n + a.from] = -1.0;
  }
  return S;
}

namespace {

// G = S * S^T = -S^2. Entries are sums of products of {-1,0,+1} values, so
// they are small integers and the result is exact in double precision.
std::vector<double> gram(const SkewAdjacency& S) {
  const int n = S.n;
  const double* a = S.entries.data();
  std::vector<double> g(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double* ri = a + static_cast<std::size_t>(i) * n;
    for (int j = 0; j <= i; ++j) {
      const double* rj = a + static_cast<std::size_t>(j) * n;
      double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
      int k = 0;
      for (; k + 4 <= n; k += 4) {
        s0 += ri[k] * rj[k];
        s1 += ri[k + 1] * rj[k + 1];
        s2 += ri[k + 2] * rj[k + 2];
        s3 += ri[k + 3] * rj[k + 3];
      }
      double s = (s0 + s1) + (s2 + s3);
      for (; k < n; ++k) s += ri[k] * rj[k];
      g[static_cast<std::size_t>(i) * n + j] = s;
      g[static_cast<std::size_t>(j) * n + i] = s;
    }
  }
  return g;
}

}  // namespace

SkewSpectrum skew_spectrum(const SkewAdjacency& S, std::optional<double> tol) {
  const int n = S.n;
  if (n == 0) return {};

  std::vector<double> g = gram(S);

  double max_entry = 0.0;
  for (double v : g) max_entry = std::max(max_entry, std::fabs(v));
  const double clamp_tol = tol.has_value() ? *tol : 1e-10 * n * max_entry;
  if (clamp_tol < 0.0) throw ParameterError("tol must be nonnegative");

  std::vector<double> mu2;
  try {
    mu2 = symmetric_eigenvalues(std::move(g), n);
  } catch (const NumericError& err) {
    throw NumericError(std::string(err.what()) + " while computing a skew spectrum of order " +
                       std::to_string(n));
  }

  // Eigenvalues of -S^2 are squared skew eigenvalues: clamp the tiny
  // negatives the solver may produce, reject anything genuinely negative.
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (double v : mu2) {
    if (v < -clamp_tol)
      throw NumericError("negative eigenvalue " + std::to_string(v) +
                         " of -S^2 below tolerance (order " + std::to_string(n) + ")");
    roots.push_back(std::sqrt(std::max(v, 0.0)));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());

  // Nonzero eigenvalues of -S^2 come in exactly equal pairs, so consecutive
  // descending roots belong together; one + and one - per pair, carrying the
  // pair mean so the spectrum is symmetric to the last bit and odd power
  // sums cancel exactly. Pair assignment inside a numerically degenerate
  // cluster is arbitrary, which is harmless: downstream statistics are
  // symmetric functions.
  SkewSpectrum spec;
  spec.values.reserve(static_cast<std::size_t>(n));
  int i = 0;
  for (; i + 1 < n; i += 2) {
    const double r =
        0.5 * (roots[static_cast<std::size_t>(i)] + roots[static_cast<std::size_t>(i) + 1]);
    spec.values.push_back(r);
    spec.values.push_back(-r);
  }
  if (i < n) spec.values.push_back(0.0);  // odd order: the residue is zero

  std::sort(spec.values.begin(), spec.values.end());
  return spec;
}

double skew_energy(const SkewSpectrum& spec) {
  double sum = 0.0;
  for (double v : spec.values) sum += std::fabs(v);
  return sum;
}

SkewSpectrum normalized_spectrum(const SkewSpectrum& spec, double scale) {
  if (!(scale > 0.0)) throw ParameterError("scale must be positive");
  SkewSpectrum out;
  out.values.reserve(spec.values.size());
  for (double v : spec.values) out.values.push_back(v / scale);
  return out;
}

}  // namespace skewsim
