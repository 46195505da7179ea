#pragma once

// Independent oracle: tries every choice of one in-arc per non-root vertex
// and keeps the acyclic ones. Only for tiny graphs.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "outbranch/digraph.hpp"

namespace brute {

struct Tally {
  std::uint64_t count = 0;
  int max_leaves = -1;
  int max_internal = -1;
  int min_leaves = -1;
};

inline Tally parent_vectors(const outbranch::RootedDigraph &d) {
  using outbranch::VertexId;
  const VertexId n = d.size();
  if (n > 9)
    throw std::invalid_argument("brute force limited to n <= 9");
  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v)
    if (v != d.root())
      others.push_back(v);
  Tally tally;
  for (VertexId v : others)
    if (d.in_degree(v) == 0)
      return tally;
  std::vector<std::size_t> pick(others.size(), 0);
  std::vector<VertexId> parent(n, -1);
  while (true) {
    for (std::size_t i = 0; i < others.size(); ++i)
      parent[others[i]] = d.in(others[i])[pick[i]];
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v) {
      VertexId x = v;
      for (VertexId steps = 0; x != d.root(); ++steps) {
        if (steps > n) {
          ok = false;
          break;
        }
        x = parent[x];
      }
    }
    if (ok) {
      ++tally.count;
      std::vector<char> has_child(n, 0);
      for (VertexId v : others)
        has_child[parent[v]] = 1;
      int internal = static_cast<int>(std::count(has_child.begin(), has_child.end(), 1));
      int leaves = n - internal;
      tally.max_leaves = std::max(tally.max_leaves, leaves);
      tally.max_internal = std::max(tally.max_internal, internal);
      tally.min_leaves = tally.min_leaves < 0 ? leaves : std::min(tally.min_leaves, leaves);
    }
    std::size_t i = 0;
    while (i < others.size() && ++pick[i] == static_cast<std::size_t>(d.in_degree(others[i])))
      pick[i++] = 0;
    if (i == others.size())
      break;
  }
  return tally;
}

} // namespace brute
