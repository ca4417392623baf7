#include "skewsim/moments.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewsim/detail/parallel.hpp"
#include "skewsim/errors.hpp"
#include "skewsim/rng.hpp"
#include "skewsim/spectra.hpp"

namespace skewsim {

XiMoment xi_moment_form(int s) {
  if (s < 0) throw ParameterError("moment order must be nonnegative");
  if (s == 0) return {0, 1, 0};
  if (s % 2 == 1) return {s, 0, 0};
  return {s, s % 4 == 0 ? 1 : -1, (s - 2) / 2};
}

Rational xi_moment(int s, const Rational& p) {
  if (p <= 0 || p > 1) throw ParameterError("p must lie in (0,1]");
  const XiMoment form = xi_moment_form(s);
  if (form.sign == 0) return 0;
  Rational value = form.sign;
  for (int i = 0; i < form.exponent; ++i) value /= p;
  return value;
}

WalkMoment expected_trace_moment_exact(int n, int k, const Rational& p) {
  if (n < 1 || n > 8) throw ParameterError("n must lie in [1,8] (n^k walk enumeration)");
  if (k < 1 || k > 8) throw ParameterError("k must lie in [1,8] (n^k walk enumeration)");
  if (p <= 0 || p > 1) throw ParameterError("p must lie in (0,1]");

  // Each closed walk factors over its distinct unordered edges: an edge
  // traversed a times one way and b times the other contributes
  // (-1)^b E[xi^(a+b)] = sign * p^-exponent, and a diagonal step kills the
  // walk. Accumulate integer walk counts per total exponent; rationals only
  // enter at the end.
  std::array<std::int64_t, 8> count_by_exponent{};  // exponent <= (k-2)/2 < 8

  std::array<int, 8> idx{};
  idx.fill(0);
  const std::int64_t total = [&] {
    std::int64_t t = 1;
    for (int i = 0; i < k; ++i) t *= n;
    return t;
  }();

  struct EdgeUse {
    int u, v;       // normalized u < v
    int forward;    // traversals u -> v
    int backward;   // traversals v -> u
  };

  for (std::int64_t w = 0; w < total; ++w) {
    bool skip = false;
    for (int i = 0; i < k && !skip; ++i)
      if (idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>((i + 1) % k)])
        skip = true;

    if (!skip) {
      std::array<EdgeUse, 8> edges{};
      int edge_count = 0;
      for (int i = 0; i < k; ++i) {
        int a = idx[static_cast<std::size_t>(i)];
        int b = idx[static_cast<std::size_t>((i + 1) % k)];
        const bool fwd = a < b;
        if (!fwd) std::swap(a, b);
        int at = -1;
        for (int j = 0; j < edge_count; ++j)
          if (edges[static_cast<std::size_t>(j)].u == a &&
              edges[static_cast<std::size_t>(j)].v == b) {
            at = j;
            break;
          }
        if (at < 0) {
          at = edge_count++;
          edges[static_cast<std::size_t>(at)] = {a, b, 0, 0};
        }
        if (fwd)
          ++edges[static_cast<std::size_t>(at)].forward;
        else
          ++edges[static_cast<std::size_t>(at)].backward;
      }

      int sign = 1, exponent = 0;
      for (int j = 0; j < edge_count && sign != 0; ++j) {
        const EdgeUse& e = edges[static_cast<std::size_t>(j)];
        const XiMoment form = xi_moment_form(e.forward + e.backward);
        if (form.sign == 0) {
          sign = 0;
          break;
        }
        sign *= form.sign * (e.backward % 2 == 0 ? 1 : -1);
        exponent += form.exponent;
      }
      if (sign != 0) count_by_exponent[static_cast<std::size_t>(exponent)] += sign;
    }

    // Odometer over index tuples.
    for (int i = 0; i < k; ++i) {
      if (++idx[static_cast<std::size_t>(i)] < n) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }

  WalkMoment result{n, k, p, Rational(0)};
  Rational inv_power = 1;  // (1/p)^e, updated incrementally
  for (int e = 0; e < static_cast<int>(count_by_exponent.size()); ++e) {
    if (count_by_exponent[static_cast<std::size_t>(e)] != 0)
      result.value += Rational(count_by_exponent[static_cast<std::size_t>(e)]) * inv_power;
    inv_power /= p;
  }

  if (k % 2 == 1) {
    // Every odd-length walk has an edge with odd total use, so the sum is
    // identically zero; return the exact zero without the irrational
    // n^(1+k/2) normalization.
    return result;
  }

  Rational denom = 1;
  for (int i = 0; i < 1 + k / 2; ++i) denom *= n;
  result.value /= denom;
  return result;
}

MonteCarloMoment empirical_trace_moment(const GnpParams& params, int k, int trials,
                                        int threads) {
  if (trials < 2) throw ParameterError("trials must be at least 2");
  if (k < 0) throw ParameterError("k must be nonnegative");
  if (!(params.p > 0.0 && params.p <= 1.0))
    throw ParameterError("p must lie in (0,1]");

  const double root_p = std::sqrt(params.p);
  std::vector<double> samples(static_cast<std::size_t>(trials));
  detail::parallel_for_index(trials, threads, [&](int t) {
    GnpParams trial = params;
    trial.seed = derive_seed(params.seed, static_cast<std::uint64_t>(t));
    const OrientedGraph g = sample_gnp_oriented(trial);
    const SkewSpectrum spec = skew_spectrum(skew_adjacency(g));
    double sum = 0.0;
    for (double lambda : spec.values) {
      double term = 1.0;
      const double value = lambda / root_p;
      for (int i = 0; i < k; ++i) term *= value;
      sum += term;
    }
    samples[static_cast<std::size_t>(t)] =
        sum / std::pow(static_cast<double>(params.n), 1.0 + k / 2.0);
  });

  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= trials;
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= trials - 1;
  return {mean, std::sqrt(var / trials)};
}

namespace {

struct CatalanWalkSearch {
  int m;
  int max_label;
  std::int64_t found = 0;
  // used[u][v]: the directed edge u -> v already traversed (each may appear
  // at most once). deficit: directed edges awaiting their inverse.
  std::array<std::array<bool, 9>, 9> used{};

  void dfs(int cur, int step, int labels, int deficit) {
    if (step == 2 * m) {
      if (cur == 0 && deficit == 0 && labels == m + 1) ++found;
      return;
    }
    const int remaining = 2 * m - step;
    const int limit = std::min(labels + 1, max_label + 1);
    for (int next = 0; next < limit; ++next) {
      if (next == cur) continue;
      if (used[static_cast<std::size_t>(cur)][static_cast<std::size_t>(next)]) continue;
      const bool closes = used[static_cast<std::size_t>(next)][static_cast<std::size_t>(cur)];
      // A fresh edge to an already-visited vertex closes a cycle, which
      // caps the walk at m distinct vertices; only tree walks qualify.
      if (next != labels && !closes) continue;
      const int new_deficit = deficit + (closes ? -1 : 1);
      if (new_deficit > remaining - 1) continue;  // cannot balance in time
      used[static_cast<std::size_t>(cur)][static_cast<std::size_t>(next)] = true;
      dfs(next, step + 1, labels + (next == labels ? 1 : 0), new_deficit);
      used[static_cast<std::size_t>(cur)][static_cast<std::size_t>(next)] = false;
    }
  }
};

}  // namespace

std::int64_t catalan_closed_walk_count(int m) {
  if (m < 1 || m > 7) throw ParameterError("m must lie in [1,7]");
  // Walks are counted once per shape: vertices are labeled by first visit,
  // so the next unused label is the only admissible fresh vertex. The
  // counted class is the one with every edge and its inverse traversed
  // exactly once AND m+1 distinct vertices: dropping the vertex-count
  // requirement admits cycle-closing walks (8 instead of 5 at m=3) that
  // belong to the lower-order category of the trace expansion.
  CatalanWalkSearch search{m, m, 0, {}};
  search.dfs(0, 0, 1, 0);
  return search.found;
}

}  // namespace skewsim
