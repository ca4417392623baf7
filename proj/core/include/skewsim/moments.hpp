#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewsim/graphgen.hpp"

namespace skewsim {

using Rational = boost::multiprecision::cpp_rational;

/// E[xi^s] in the form sign * p^(-exponent), sign in {-1, 0, +1}, for the
/// normalized matrix-entry variable xi taking i/sqrt(p), -i/sqrt(p), 0 with
/// probabilities p/2, p/2, 1-p. Odd s vanish; even s >= 2 have
/// exponent (s-2)/2 and sign +1 when s % 4 == 0, -1 when s % 4 == 2.
/// In particular E[xi^2] = -1 while E[|xi|^2] = +1.
struct XiMoment {
  int s = 0;
  int sign = 0;
  int exponent = 0;
};

/// Structure of E[xi^s] (independent of p). s >= 0.
XiMoment xi_moment_form(int s);

/// E[xi^s] evaluated at a rational p in (0, 1]; exact.
Rational xi_moment(int s, const Rational& p);

/// Exact value of (1/n^(1+k/2)) * E[Trace(M^k)] where M is the
/// sqrt(p)-normalized Hermitian matrix of the n-vertex model, obtained by
/// exhaustive enumeration of the n^k closed index walks. Odd k are exactly
/// zero (every walk contains an edge traversed an odd total number of
/// times). Bounds 1 <= n <= 8, 1 <= k <= 8 guard the n^k enumeration.
struct WalkMoment {
  int n = 0;
  int k = 0;
  Rational p;
  Rational value;
};

WalkMoment expected_trace_moment_exact(int n, int k, const Rational& p);

/// Monte-Carlo estimate of the same normalized trace moment from sampled
/// graphs: mean and standard error over `trials` independent samples
/// (trials >= 2). Odd-k sums are reported as-is and straddle zero.
struct MonteCarloMoment {
  double mean = 0.0;
  double std_error = 0.0;
};

MonteCarloMoment empirical_trace_moment(const GnpParams& params, int k, int trials,
                                        int threads = 0);

/// Number of closed walks of length 2m from a fixed root that touch m+1
/// distinct vertices and traverse every edge and its inverse exactly once
/// (the leading class of the trace expansion), counted up to relabeling
/// (vertices are labeled by first visit). Exhaustive search; 1 <= m <= 7.
/// Equals the Catalan number (1/(m+1)) * binom(2m, m).
std::int64_t catalan_closed_walk_count(int m);

}  // namespace skewsim
