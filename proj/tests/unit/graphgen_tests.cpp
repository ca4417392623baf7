#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "skewsim/errors.hpp"
#include "skewsim/graph.hpp"
#include "skewsim/graphgen.hpp"

using namespace skewsim;

namespace {

// Simple-d-regular validation scan: no loops or digons are possible by the
// OrientedGraph invariants, so only the degrees need checking.
void check_regular(const OrientedGraph& g, std::int32_t d) {
  for (auto [din, dout] : degree_sequence(g)) CHECK(din + dout == d);
}

}  // namespace

TEST_CASE("gnp with p = 0 is empty") {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL})
    CHECK(sample_gnp_oriented({4, 0.0, seed}).arc_count() == 0);
}

TEST_CASE("gnp with p = 1 is a tournament") {
  for (std::uint64_t seed : {0ULL, 5ULL}) {
    const OrientedGraph g = sample_gnp_oriented({3, 1.0, seed});
    CHECK(g.arc_count() == 3);
  }
}

TEST_CASE("gnp arc count stays in the binomial window") {
  // C(1000,2)*0.1 = 49950 with standard deviation sqrt(C(1000,2)*0.1*0.9).
  const OrientedGraph g = sample_gnp_oriented({1000, 0.1, 7});
  const double mean = 499500.0 * 0.1;
  const double sd = std::sqrt(499500.0 * 0.1 * 0.9);
  CHECK(std::fabs(static_cast<double>(g.arc_count()) - mean) <= 4.0 * sd);
}

TEST_CASE("gnp orientation counts are balanced at p = 1") {
  // n = 142 gives 10011 forced edges; arcs oriented low->high are
  // Binomial(10011, 1/2).
  const OrientedGraph g = sample_gnp_oriented({142, 1.0, 1});
  const double m = static_cast<double>(g.arc_count());
  CHECK(m == 10011.0);
  double low_to_high = 0;
  for (const Arc& a : g.arcs())
    if (a.from < a.to) ++low_to_high;
  CHECK(std::fabs(low_to_high - m / 2.0) <= 4.0 * std::sqrt(m * 0.25));
}

TEST_CASE("gnp rejects invalid parameters") {
  CHECK_THROWS_AS(sample_gnp_oriented({4, -0.1, 0}), ParameterError);
  CHECK_THROWS_AS(sample_gnp_oriented({4, 1.5, 0}), ParameterError);
  CHECK_THROWS_AS(sample_gnp_oriented({4, std::nan(""), 0}), ParameterError);
  CHECK_THROWS_AS(sample_gnp_oriented({0, 0.5, 0}), ParameterError);
}

TEST_CASE("determinism: identical params give byte-identical edge lists") {
  const GnpParams gp{64, 0.37, 123456789};
  CHECK(write_edge_list(sample_gnp_oriented(gp)) == write_edge_list(sample_gnp_oriented(gp)));

  const RegularParams rp{40, 3, 42, 10000, RegularMethod::PairingRejection};
  CHECK(write_edge_list(sample_regular_oriented(rp)) ==
        write_edge_list(sample_regular_oriented(rp)));

  const RegularParams rep{60, 12, 42, 10000, RegularMethod::PairingRepair};
  CHECK(write_edge_list(sample_regular_oriented(rep)) ==
        write_edge_list(sample_regular_oriented(rep)));

  // Different seeds give different graphs (statistically certain here).
  GnpParams other = gp;
  other.seed = 987654321;
  CHECK(sample_gnp_oriented(gp) != sample_gnp_oriented(other));
}

TEST_CASE("regular n=3 d=2 is the triangle") {
  const OrientedGraph g = sample_regular_oriented({3, 2, 17, 10000, RegularMethod::PairingRejection});
  CHECK(g.arc_count() == 3);
  check_regular(g, 2);
}

TEST_CASE("regular rejects invalid parameters") {
  CHECK_THROWS_AS(sample_regular_oriented({5, 3, 0}), ParameterError);  // n*d odd
  CHECK_THROWS_AS(sample_regular_oriented({4, 4, 0}), ParameterError);  // d >= n
  CHECK_THROWS_AS(sample_regular_oriented({4, -1, 0}), ParameterError);
  CHECK_THROWS_AS(sample_regular_oriented({4, 2, 0, 0}), ParameterError);  // empty budget
}

TEST_CASE("regular d=3 n=100 passes the validation scan") {
  const OrientedGraph g = sample_regular_oriented({100, 3, 1});
  check_regular(g, 3);
  // No digons: the unordered pair set has full size.
  std::set<std::pair<std::int32_t, std::int32_t>> pairs;
  for (const Arc& a : g.arcs())
    pairs.insert({std::min(a.from, a.to), std::max(a.from, a.to)});
  CHECK(static_cast<std::int64_t>(pairs.size()) == g.arc_count());
  CHECK(g.arc_count() == 150);
}

TEST_CASE("regular validation scan across parameters and methods") {
  for (const auto method : {RegularMethod::PairingRejection, RegularMethod::PairingRepair}) {
    for (const auto& [n, d] : std::vector<std::pair<std::int32_t, std::int32_t>>{
             {10, 0}, {10, 1}, {9, 2}, {16, 4}, {25, 4}}) {
      const OrientedGraph g = sample_regular_oriented({n, d, 5, 10000, method});
      check_regular(g, d);
      CHECK(g.arc_count() == static_cast<std::int64_t>(n) * d / 2);
    }
  }
}

TEST_CASE("repair method handles degrees where rejection stalls") {
  // Acceptance probability of full rejection at d=30 is ~exp(-224).
  const OrientedGraph g = sample_regular_oriented({200, 30, 9, 10000, RegularMethod::PairingRepair});
  check_regular(g, 30);
}

TEST_CASE("rejection reports exhaustion instead of degrading") {
  // d=8 on 30 vertices accepts with probability ~1e-7 per attempt.
  CHECK_THROWS_AS(sample_regular_oriented({30, 8, 2, 3, RegularMethod::PairingRejection}),
                  SamplingError);
}
