#include "outbranch/connectivity.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

namespace outbranch {

ReachWorkspace::ReachWorkspace(VertexId n) { resize(n); }

void ReachWorkspace::resize(VertexId n) {
  seen_.assign(n, 0);
  blocked_.assign(n, 0);
  queue_.clear();
  queue_.reserve(n);
  epoch_ = 1;
}

void ReachWorkspace::reset() {
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::fill(blocked_.begin(), blocked_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
}

void ReachWorkspace::block(VertexId v) { blocked_[v] = epoch_; }

VertexId ReachWorkspace::search(const RootedDigraph &d, VertexId from, const Arc *skip) {
  if (blocked_[from] == epoch_)
    return 0;
  queue_.clear();
  queue_.push_back(from);
  seen_[from] = epoch_;
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    VertexId u = queue_[i];
    for (VertexId w : d.out(u)) {
      if (seen_[w] == epoch_ || blocked_[w] == epoch_)
        continue;
      if (skip && skip->tail == u && skip->head == w)
        continue;
      seen_[w] = epoch_;
      queue_.push_back(w);
    }
  }
  return static_cast<VertexId>(queue_.size());
}

std::vector<VertexId> CutStructure::cut_vertices() const {
  std::vector<VertexId> result;
  for (std::size_t v = 0; v < is_cut_vertex.size(); ++v)
    if (is_cut_vertex[v])
      result.push_back(static_cast<VertexId>(v));
  return result;
}

bool CutStructure::is_cut_edge(Arc a) const {
  return std::binary_search(cut_edges.begin(), cut_edges.end(), a);
}

namespace {

void require_connected(const RootedDigraph &d) {
  if (!is_connected(d))
    throw PreconditionError("cut structure needs every vertex reachable from the root");
}

} // namespace

CutStructure cut_structure(const RootedDigraph &d) {
  require_connected(d);
  const VertexId n = d.size();
  CutStructure result;
  result.is_cut_vertex.assign(n, 0);
  // The unique surviving in-neighbour of v, or kNoVertex.
  std::vector<VertexId> sole_entry(n, kNoVertex);

#pragma omp parallel
  {
    ReachWorkspace ws(n);
#pragma omp for schedule(dynamic, 8)
    for (VertexId v = 0; v < n; ++v) {
      if (v == d.root())
        continue;
      ws.reset();
      ws.block(v);
      VertexId reached = ws.search(d, d.root());
      result.is_cut_vertex[v] = reached < n - 1;
      VertexId entry = kNoVertex;
      int entries = 0;
      for (VertexId z : d.in(v))
        if (ws.reached(z)) {
          entry = z;
          ++entries;
        }
      if (entries == 1)
        sole_entry[v] = entry;
    }
  }

  for (VertexId v = 0; v < n; ++v)
    if (sole_entry[v] != kNoVertex)
      result.cut_edges.push_back({sole_entry[v], v});
  std::sort(result.cut_edges.begin(), result.cut_edges.end());
  return result;
}

CutStructure cut_structure_serial(const RootedDigraph &d) {
  require_connected(d);
  const VertexId n = d.size();
  CutStructure result;
  result.is_cut_vertex.assign(n, 0);
  ReachWorkspace ws(n);
  for (VertexId v = 0; v < n; ++v) {
    if (v == d.root())
      continue;
    ws.reset();
    ws.block(v);
    result.is_cut_vertex[v] = ws.search(d, d.root()) < n - 1;
  }
  for (Arc a : d.arcs()) {
    ws.reset();
    if (ws.search(d, d.root(), &a) < n)
      result.cut_edges.push_back(a);
  }
  return result;
}

} // namespace outbranch
