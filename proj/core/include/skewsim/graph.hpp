#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace skewsim {

/// One arc u -> v of an oriented graph.
struct Arc {
  std::int32_t from = 0;
  std::int32_t to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Oriented graph: an undirected simple graph with one direction chosen per
/// edge. No loops, no digons (at most one arc per unordered pair). Arcs are
/// stored sorted by (from, to) so serialization is canonical. Instances are
/// immutable after construction and safe to share across threads.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  /// Sorts the arcs and validates the invariants; throws ParameterError on
  /// loops, out-of-range vertex ids or duplicate unordered pairs.
  OrientedGraph(std::int32_t n, std::vector<Arc> arcs);

  std::int32_t vertex_count() const noexcept { return n_; }
  std::int64_t arc_count() const noexcept { return static_cast<std::int64_t>(arcs_.size()); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  std::int32_t n_ = 0;
  std::vector<Arc> arcs_;
};

/// (in_degree, out_degree) per vertex. Both columns sum to arc_count().
std::vector<std::pair<std::int32_t, std::int32_t>> degree_sequence(const OrientedGraph& g);

/// Edge-list text format: first line "n m", then m lines "u v" (one arc
/// u -> v each), 0-based decimal ids, LF line endings.
void write_edge_list(const OrientedGraph& g, std::ostream& out);
std::string write_edge_list(const OrientedGraph& g);

/// Inverse of write_edge_list. Throws ParseError (with line number) on
/// malformed lines, out-of-range ids, self-loops, duplicate pairs, or a
/// header/body mismatch.
OrientedGraph read_edge_list(std::istream& in);
OrientedGraph read_edge_list(const std::string& text);

}  // namespace skewsim
