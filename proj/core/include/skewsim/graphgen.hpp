#pragma once

#include <cstdint>

#include "skewsim/graph.hpp"

namespace skewsim {

/// Parameters of the binomial random oriented graph: every unordered pair
/// becomes an edge independently with probability p, and each edge gets a
/// uniform independent direction.
struct GnpParams {
  std::int32_t n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

enum class RegularMethod {
  /// Configuration-model pairing with full rejection of outcomes containing
  /// loops or multi-edges: exactly uniform over simple d-regular graphs.
  /// The acceptance rate decays like exp(-(d*d-1)/4), so rejection stalls
  /// once d grows past roughly n^(1/3); expect SamplingError there rather
  /// than a silent fallback.
  PairingRejection,
  /// Configuration-model pairing followed by random degree-preserving
  /// rewires of the defective pairs until the graph is simple. Degree-exact
  /// but only approximately uniform; intended for the growing-d regime
  /// where full rejection is infeasible.
  PairingRepair,
};

/// Parameters of the random d-regular oriented graph (uniform orientation
/// of a random d-regular graph). Requires n*d even and 0 <= d < n.
struct RegularParams {
  std::int32_t n = 1;
  std::int32_t d = 0;
  std::uint64_t seed = 0;
  std::int64_t max_attempts = 10000;
  RegularMethod method = RegularMethod::PairingRejection;
};

/// Deterministic in params (including seed). Throws ParameterError on
/// invalid n or p.
OrientedGraph sample_gnp_oriented(const GnpParams& params);

/// Deterministic in params. Throws ParameterError when n*d is odd or
/// d >= n, SamplingError when the attempt budget is exhausted (the caller
/// may raise max_attempts or switch to PairingRepair).
OrientedGraph sample_regular_oriented(const RegularParams& params);

const char* to_string(RegularMethod method) noexcept;

}  // namespace skewsim
