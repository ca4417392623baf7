#include "skewsim/graphgen.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewsim/errors.hpp"
#include "skewsim/rng.hpp"

namespace skewsim {

namespace {

using Edge = std::pair<std::int32_t, std::int32_t>;  // normalized u < v

// Orients each edge with an independent fair coin, in canonical (sorted)
// edge order so the output is a function of the edge set and the stream.
std::vector<Arc> orient_edges(std::vector<Edge> edges, Xoshiro256StarStar& rng) {
  std::sort(edges.begin(), edges.end());
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const Edge& e : edges) {
    if (rng.bernoulli(0.5))
      arcs.push_back({e.first, e.second});
    else
      arcs.push_back({e.second, e.first});
  }
  return arcs;
}

std::vector<Edge> pair_stubs_once(std::vector<std::int32_t>& stubs, Xoshiro256StarStar& rng) {
  // Fisher-Yates; a uniform permutation paired consecutively is a uniform
  // perfect matching of the stubs.
  for (std::size_t i = stubs.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i + 1));
    std::swap(stubs[i], stubs[j]);
  }
  std::vector<Edge> pairs;
  pairs.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i < stubs.size(); i += 2)
    pairs.emplace_back(stubs[i], stubs[i + 1]);
  return pairs;
}

bool is_simple(std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.first == e.second) return false;
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

std::vector<Edge> regular_by_rejection(const RegularParams& params, Xoshiro256StarStar& rng) {
  const std::int64_t stub_count = static_cast<std::int64_t>(params.n) * params.d;
  std::vector<std::int32_t> stubs(static_cast<std::size_t>(stub_count));
  for (std::int32_t v = 0, i = 0; v < params.n; ++v)
    for (std::int32_t r = 0; r < params.d; ++r) stubs[static_cast<std::size_t>(i++)] = v;

  for (std::int64_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    std::vector<Edge> pairs = pair_stubs_once(stubs, rng);
    if (!is_simple(pairs)) continue;
    for (Edge& e : pairs)
      if (e.first > e.second) std::swap(e.first, e.second);
    return pairs;
  }
  throw SamplingError("pairing model rejected " + std::to_string(params.max_attempts) +
                      " attempts for n=" + std::to_string(params.n) +
                      " d=" + std::to_string(params.d) +
                      "; raise max_attempts or use the repair method");
}

// Pairing followed by random degree-preserving 2-rewires of defective pairs
// (loops and duplicated edges). Every committed rewire removes at least one
// defect and never introduces a new one, so the loop terminates once enough
// proposals are accepted.
std::vector<Edge> regular_by_repair(const RegularParams& params, Xoshiro256StarStar& rng) {
  const std::int64_t stub_count = static_cast<std::int64_t>(params.n) * params.d;
  std::vector<std::int32_t> stubs(static_cast<std::size_t>(stub_count));
  for (std::int32_t v = 0, i = 0; v < params.n; ++v)
    for (std::int32_t r = 0; r < params.d; ++r) stubs[static_cast<std::size_t>(i++)] = v;

  std::vector<Edge> pairs = pair_stubs_once(stubs, rng);
  const std::size_t m = pairs.size();

  auto key = [n = static_cast<std::int64_t>(params.n)](Edge e) {
    const std::int64_t a = std::min(e.first, e.second);
    const std::int64_t b = std::max(e.first, e.second);
    return a * n + b;
  };

  std::unordered_map<std::int64_t, std::vector<int>> holders;  // edge key -> pair indices
  holders.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i)
    holders[key(pairs[i])].push_back(static_cast<int>(i));

  auto is_defective = [&](int i) {
    const Edge& e = pairs[static_cast<std::size_t>(i)];
    if (e.first == e.second) return true;
    return holders[key(e)].size() >= 2;
  };

  // Defect list with O(1) membership and random removal.
  std::vector<int> defects;
  std::vector<int> pos(m, -1);
  auto defect_add = [&](int i) {
    if (pos[static_cast<std::size_t>(i)] >= 0) return;
    pos[static_cast<std::size_t>(i)] = static_cast<int>(defects.size());
    defects.push_back(i);
  };
  auto defect_remove = [&](int i) {
    const int at = pos[static_cast<std::size_t>(i)];
    if (at < 0) return;
    const int last = defects.back();
    defects[static_cast<std::size_t>(at)] = last;
    pos[static_cast<std::size_t>(last)] = at;
    defects.pop_back();
    pos[static_cast<std::size_t>(i)] = -1;
  };
  auto refresh = [&](int i) {
    if (is_defective(i))
      defect_add(i);
    else
      defect_remove(i);
  };

  for (std::size_t i = 0; i < m; ++i)
    if (is_defective(static_cast<int>(i))) defect_add(static_cast<int>(i));

  auto holders_erase = [&](std::int64_t k, int i) {
    auto& vec = holders[k];
    vec.erase(std::find(vec.begin(), vec.end(), i));
  };

  std::int64_t budget = 1000 + 200 * static_cast<std::int64_t>(defects.size());
  while (!defects.empty()) {
    if (budget-- <= 0)
      throw SamplingError("pairing repair stalled for n=" + std::to_string(params.n) +
                          " d=" + std::to_string(params.d));
    const int i = defects[static_cast<std::size_t>(rng.uniform_below(defects.size()))];
    int j = static_cast<int>(rng.uniform_below(m));
    if (j == i) continue;

    const Edge ei = pairs[static_cast<std::size_t>(i)];
    const Edge ej = pairs[static_cast<std::size_t>(j)];
    // Two ways to cross the four stubs; pick one at random.
    Edge p1, p2;
    if (rng.bernoulli(0.5)) {
      p1 = {ei.first, ej.first};
      p2 = {ei.second, ej.second};
    } else {
      p1 = {ei.first, ej.second};
      p2 = {ei.second, ej.first};
    }
    if (p1.first == p1.second || p2.first == p2.second) continue;

    const std::int64_t k1 = key(p1), k2 = key(p2);
    const std::int64_t ki = key(ei), kj = key(ej);
    // Occupancy of the new edges once the two old pairs are lifted.
    auto occupancy = [&](std::int64_t k) {
      std::size_t c = 0;
      auto it = holders.find(k);
      if (it != holders.end()) {
        for (int h : it->second)
          if (h != i && h != j) ++c;
      }
      return c;
    };
    if (k1 == k2) continue;  // would create a duplicate pair immediately
    if (occupancy(k1) > 0 || occupancy(k2) > 0) continue;

    holders_erase(ki, i);
    holders_erase(kj, j);
    pairs[static_cast<std::size_t>(i)] = p1;
    pairs[static_cast<std::size_t>(j)] = p2;
    holders[k1].push_back(i);
    holders[k2].push_back(j);

    refresh(i);
    refresh(j);
    // Former co-holders of the lifted edges may have become clean.
    for (std::int64_t k : {ki, kj}) {
      auto it = holders.find(k);
      if (it != holders.end())
        for (int h : it->second) refresh(h);
    }
  }

  for (Edge& e : pairs)
    if (e.first > e.second) std::swap(e.first, e.second);
  return pairs;
}

}  // namespace

const char* to_string(RegularMethod method) noexcept {
  return method == RegularMethod::PairingRejection ? "rejection" : "repair";
}

OrientedGraph sample_gnp_oriented(const GnpParams& params) {
  if (params.n < 1) throw ParameterError("n must be at least 1");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw ParameterError("edge probability p must lie in [0,1]");

  Xoshiro256StarStar rng(params.seed);
  std::vector<Arc> arcs;
  for (std::int32_t u = 0; u < params.n; ++u) {
    for (std::int32_t v = u + 1; v < params.n; ++v) {
      if (!rng.bernoulli(params.p)) continue;
      if (rng.bernoulli(0.5))
        arcs.push_back({u, v});
      else
        arcs.push_back({v, u});
    }
  }
  return OrientedGraph(params.n, std::move(arcs));
}

OrientedGraph sample_regular_oriented(const RegularParams& params) {
  if (params.n < 1) throw ParameterError("n must be at least 1");
  if (params.d < 0 || params.d >= params.n)
    throw ParameterError("degree d must satisfy 0 <= d < n");
  if ((static_cast<std::int64_t>(params.n) * params.d) % 2 != 0)
    throw ParameterError("n*d must be even for a d-regular graph");
  if (params.max_attempts < 1) throw ParameterError("max_attempts must be positive");

  Xoshiro256StarStar rng(params.seed);
  if (params.d == 0) return OrientedGraph(params.n, {});

  std::vector<Edge> edges = params.method == RegularMethod::PairingRejection
                                ? regular_by_rejection(params, rng)
                                : regular_by_repair(params, rng);
  return OrientedGraph(params.n, orient_edges(std::move(edges), rng));
}

}  // namespace skewsim
