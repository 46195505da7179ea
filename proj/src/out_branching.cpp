#include "outbranch/out_branching.hpp"

#include <string>

namespace outbranch {

std::vector<int> OutBranching::child_counts() const {
  std::vector<int> counts(parent.size(), 0);
  for (VertexId p : parent)
    if (p != kNoVertex)
      ++counts[p];
  return counts;
}

int OutBranching::leaf_count() const {
  int leaves = 0;
  for (int c : child_counts())
    leaves += c == 0;
  return leaves;
}

std::vector<VertexId> OutBranching::internal_vertices() const {
  std::vector<VertexId> result;
  auto counts = child_counts();
  for (VertexId v = 0; v < size(); ++v)
    if (counts[v] > 0)
      result.push_back(v);
  return result;
}

std::vector<VertexId> OutBranching::leaves() const {
  std::vector<VertexId> result;
  auto counts = child_counts();
  for (VertexId v = 0; v < size(); ++v)
    if (counts[v] == 0)
      result.push_back(v);
  return result;
}

std::string branching_defect(const RootedDigraph &d, const OutBranching &t) {
  if (t.size() != d.size())
    return "branching spans " + std::to_string(t.size()) + " vertices, graph has " +
           std::to_string(d.size());
  if (t.root != d.root() || t.parent[d.root()] != kNoVertex)
    return "branching is not rooted at the graph root";
  for (VertexId v = 0; v < t.size(); ++v) {
    if (v == t.root)
      continue;
    VertexId p = t.parent[v];
    if (p == kNoVertex)
      return "vertex " + std::to_string(v) + " has no parent";
    if (!d.has_arc(p, v))
      return "tree arc (" + std::to_string(p) + "," + std::to_string(v) + ") not in graph";
  }
  // Walking up from every vertex must hit the root within n steps.
  for (VertexId v = 0; v < t.size(); ++v) {
    VertexId x = v;
    for (VertexId steps = 0; x != t.root; ++steps) {
      if (steps > t.size())
        return "parent pointers contain a cycle through " + std::to_string(v);
      x = t.parent[x];
    }
  }
  return {};
}

OutBranching bfs_branching(const RootedDigraph &d) {
  OutBranching t{d.root(), std::vector<VertexId>(d.size(), kNoVertex)};
  std::vector<char> seen(d.size(), 0);
  std::vector<VertexId> queue{d.root()};
  seen[d.root()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (VertexId w : d.out(queue[i]))
      if (!seen[w]) {
        seen[w] = 1;
        t.parent[w] = queue[i];
        queue.push_back(w);
      }
  if (static_cast<VertexId>(queue.size()) != d.size())
    throw PreconditionError("BFS branching needs every vertex reachable from the root");
  return t;
}

const char *verdict_name(Verdict v) {
  switch (v) {
  case Verdict::reduced:
    return "REDUCED";
  case Verdict::yes:
    return "YES";
  case Verdict::no:
    return "NO";
  }
  return "?";
}

} // namespace outbranch
