#include "skewsim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "skewsim/errors.hpp"

namespace skewsim {

OrientedGraph::OrientedGraph(std::int32_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 0) throw ParameterError("vertex count must be nonnegative");
  std::sort(arcs_.begin(), arcs_.end());
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  pairs.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
      throw ParameterError("arc endpoint out of range");
    if (a.from == a.to) throw ParameterError("self-loop arc");
    pairs.emplace_back(std::min(a.from, a.to), std::max(a.from, a.to));
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw ParameterError("duplicate arc on an unordered pair (digon or repeat)");
}

std::vector<std::pair<std::int32_t, std::int32_t>> degree_sequence(const OrientedGraph& g) {
  std::vector<std::pair<std::int32_t, std::int32_t>> deg(
      static_cast<std::size_t>(g.vertex_count()), {0, 0});
  for (const Arc& a : g.arcs()) {
    ++deg[static_cast<std::size_t>(a.to)].first;
    ++deg[static_cast<std::size_t>(a.from)].second;
  }
  return deg;
}

void write_edge_list(const OrientedGraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
}

std::string write_edge_list(const OrientedGraph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

namespace {

// Parses exactly "<int> <int>" with single-space separation relaxed to any
// run of spaces/tabs; rejects trailing junk.
bool parse_two_ints(std::string_view line, long long& a, long long& b) {
  const char* p = line.data();
  const char* end = p + line.size();
  auto skip_ws = [&] {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip_ws();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{}) return false;
  p = r1.ptr;
  skip_ws();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{}) return false;
  p = r2.ptr;
  skip_ws();
  return p == end;
}

}  // namespace

OrientedGraph read_edge_list(std::istream& in) {
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line)) throw ParseError("missing header line", 1);
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  long long n = 0, m = 0;
  if (!parse_two_ints(line, n, m)) throw ParseError("malformed header, expected \"n m\"", line_no);
  if (n < 0 || m < 0) throw ParseError("negative count in header", line_no);
  if (n > (1LL << 31) - 1) throw ParseError("vertex count too large", line_no);

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  std::vector<std::pair<std::int32_t, std::int32_t>> seen;
  seen.reserve(static_cast<std::size_t>(m));

  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw ParseError("unexpected end of input, expected " + std::to_string(m) + " arcs",
                       line_no + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    long long u = 0, v = 0;
    if (!parse_two_ints(line, u, v)) throw ParseError("malformed arc line", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex id out of range", line_no);
    if (u == v) throw ParseError("self-loop arc", line_no);
    arcs.push_back({static_cast<std::int32_t>(u), static_cast<std::int32_t>(v)});
    seen.emplace_back(static_cast<std::int32_t>(std::min(u, v)),
                      static_cast<std::int32_t>(std::max(u, v)));
  }

  // Trailing blank lines are tolerated; anything else is an error.
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) throw ParseError("unexpected content after arc list", line_no);
  }

  std::sort(seen.begin(), seen.end());
  if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end()) {
    std::ostringstream msg;
    msg << "duplicate unordered pair {" << it->first << "," << it->second << "}";
    throw ParseError(msg.str(), line_no);
  }

  return OrientedGraph(static_cast<std::int32_t>(n), std::move(arcs));
}

OrientedGraph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace skewsim
