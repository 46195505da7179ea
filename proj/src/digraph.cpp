#include "outbranch/digraph.hpp"

#include <algorithm>
#include <string>

#include "outbranch/connectivity.hpp"

namespace outbranch {

namespace {

std::string arc_text(Arc a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

void check_ids(VertexId n, VertexId root, std::span<const Arc> arcs) {
  if (n < 1)
    throw InputError("digraph needs at least one vertex");
  if (root < 0 || root >= n)
    throw InputError("root " + std::to_string(root) + " out of range");
  for (Arc a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw InputError("arc " + arc_text(a) + " has an id out of range");
    if (a.head == root && a.tail != root)
      throw InputError("arc " + arc_text(a) + " enters the root");
  }
}

} // namespace

RootedDigraph::RootedDigraph() : out_(1), in_(1) {}

RootedDigraph::RootedDigraph(VertexId n, VertexId root, std::span<const Arc> arcs) {
  check_ids(n, root, arcs);
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].tail == sorted[i].head)
      throw InputError("self-loop at " + std::to_string(sorted[i].tail));
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw InputError("duplicate arc " + arc_text(sorted[i]));
  }
  *this = RootedDigraph(Unchecked{}, n, root, std::move(sorted));
}

RootedDigraph RootedDigraph::simplified(VertexId n, VertexId root,
                                        std::span<const Arc> arcs) {
  std::vector<Arc> kept;
  kept.reserve(arcs.size());
  for (Arc a : arcs)
    if (a.tail != a.head)
      kept.push_back(a);
  check_ids(n, root, kept);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return RootedDigraph(Unchecked{}, n, root, std::move(kept));
}

RootedDigraph::RootedDigraph(Unchecked, VertexId n, VertexId root,
                             std::vector<Arc> arcs)
    : root_(root), arc_count_(arcs.size()), out_(n), in_(n) {
  // arcs is sorted by (tail, head): out lists come out sorted for free.
  for (Arc a : arcs) {
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  // in lists are filled in tail order, hence sorted as well.
}

bool RootedDigraph::has_arc(VertexId tail, VertexId head) const {
  if (!valid(tail) || !valid(head))
    return false;
  const auto &list = out_[tail];
  return std::binary_search(list.begin(), list.end(), head);
}

std::vector<Arc> RootedDigraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : out_[u])
      result.push_back({u, v});
  return result;
}

Surgery contract_arc(const RootedDigraph &d, Arc a) {
  if (!d.has_arc(a))
    throw InputError("cannot contract absent arc " + arc_text(a));
  const VertexId keep = std::min(a.tail, a.head);
  const VertexId drop = std::max(a.tail, a.head);
  std::vector<VertexId> map(d.size());
  for (VertexId v = 0; v < d.size(); ++v)
    map[v] = v < drop ? v : v - 1;
  map[drop] = keep;

  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (Arc e : d.arcs())
    arcs.push_back({map[e.tail], map[e.head]});
  const VertexId root = map[d.root()];
  for (Arc e : arcs)
    if (e.head == root && e.tail != root)
      throw PreconditionError("contracting " + arc_text(a) +
                              " would give the root an in-arc");
  return {RootedDigraph::simplified(d.size() - 1, root, arcs), std::move(map)};
}

Surgery shortcut_vertex(const RootedDigraph &d, VertexId v) {
  if (!d.valid(v))
    throw InputError("vertex " + std::to_string(v) + " out of range");
  if (v == d.root())
    throw InputError("cannot shortcut the root");
  std::vector<VertexId> map(d.size());
  for (VertexId u = 0; u < d.size(); ++u)
    map[u] = u < v ? u : u - 1;
  map[v] = kNoVertex;

  std::vector<Arc> arcs;
  for (Arc e : d.arcs())
    if (e.tail != v && e.head != v)
      arcs.push_back({map[e.tail], map[e.head]});
  for (VertexId x : d.in(v))
    for (VertexId y : d.out(v))
      if (x != y)
        arcs.push_back({map[x], map[y]});
  return {RootedDigraph::simplified(d.size() - 1, map[d.root()], arcs), std::move(map)};
}

Surgery delete_arc(const RootedDigraph &d, Arc a) {
  if (!d.has_arc(a))
    throw InputError("cannot delete absent arc " + arc_text(a));
  std::vector<Arc> arcs = d.arcs();
  arcs.erase(std::find(arcs.begin(), arcs.end(), a));
  std::vector<VertexId> map(d.size());
  for (VertexId v = 0; v < d.size(); ++v)
    map[v] = v;
  return {RootedDigraph(d.size(), d.root(), arcs), std::move(map)};
}

Surgery remove_vertices(const RootedDigraph &d, std::span<const VertexId> removed) {
  std::vector<char> gone(d.size(), 0);
  for (VertexId v : removed) {
    if (!d.valid(v))
      throw InputError("vertex " + std::to_string(v) + " out of range");
    if (v == d.root())
      throw PreconditionError("the root cannot be removed");
    gone[v] = 1;
  }
  std::vector<VertexId> map(d.size(), kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < d.size(); ++v)
    if (!gone[v])
      map[v] = next++;
  std::vector<Arc> arcs;
  for (Arc e : d.arcs())
    if (!gone[e.tail] && !gone[e.head])
      arcs.push_back({map[e.tail], map[e.head]});
  return {RootedDigraph(next, map[d.root()], arcs), std::move(map)};
}

std::vector<VertexId> compose_maps(std::span<const VertexId> first,
                                   std::span<const VertexId> second) {
  std::vector<VertexId> result(first.size(), kNoVertex);
  for (std::size_t i = 0; i < first.size(); ++i)
    if (first[i] != kNoVertex)
      result[i] = second[first[i]];
  return result;
}

std::vector<VertexId> reachable(const RootedDigraph &d, VertexId from,
                                std::span<const VertexId> removed_vertices,
                                std::span<const Arc> removed_arcs) {
  if (!d.valid(from))
    throw InputError("vertex " + std::to_string(from) + " out of range");
  for (VertexId v : removed_vertices) {
    if (!d.valid(v))
      throw InputError("vertex " + std::to_string(v) + " out of range");
    if (v == from)
      throw PreconditionError("search origin is in the removed set");
  }
  std::vector<Arc> skip(removed_arcs.begin(), removed_arcs.end());
  std::sort(skip.begin(), skip.end());

  std::vector<char> seen(d.size(), 0);
  for (VertexId v : removed_vertices)
    seen[v] = 1;
  std::vector<VertexId> queue{from};
  std::vector<VertexId> result{from};
  seen[from] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId u = queue[i];
    for (VertexId w : d.out(u)) {
      if (seen[w] || std::binary_search(skip.begin(), skip.end(), Arc{u, w}))
        continue;
      seen[w] = 1;
      queue.push_back(w);
      result.push_back(w);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<VertexId> unreachable_vertices(const RootedDigraph &d) {
  ReachWorkspace ws(d.size());
  ws.search(d, d.root());
  std::vector<VertexId> result;
  for (VertexId v = 0; v < d.size(); ++v)
    if (!ws.reached(v))
      result.push_back(v);
  return result;
}

bool is_connected(const RootedDigraph &d) {
  ReachWorkspace ws(d.size());
  return ws.search(d, d.root()) == d.size();
}

std::vector<VertexId> cut_vertices(const RootedDigraph &d) {
  return cut_structure(d).cut_vertices();
}

std::vector<Arc> cut_edges(const RootedDigraph &d) { return cut_structure(d).cut_edges; }

std::vector<Arc> lonely_cut_edges(std::span<const Arc> cut) {
  std::vector<Arc> result;
  for (std::size_t i = 0; i < cut.size(); ++i) {
    bool shared = (i > 0 && cut[i - 1].tail == cut[i].tail) ||
                  (i + 1 < cut.size() && cut[i + 1].tail == cut[i].tail);
    if (!shared)
      result.push_back(cut[i]);
  }
  return result;
}

std::vector<VertexId> private_neighbors(const RootedDigraph &d, VertexId u) {
  if (!d.valid(u))
    throw InputError("vertex " + std::to_string(u) + " out of range");
  std::vector<VertexId> result;
  if (u == d.root()) {
    auto out = d.out(u);
    return {out.begin(), out.end()};
  }
  ReachWorkspace ws(d.size());
  ws.block(u);
  ws.search(d, d.root());
  for (VertexId v : d.out(u))
    if (!ws.reached(v))
      result.push_back(v);
  return result;
}

std::size_t undirected_edge_count(const RootedDigraph &d) {
  std::size_t count = 0;
  for (Arc a : d.arcs())
    if (a.tail < a.head || !d.has_arc(a.head, a.tail))
      ++count;
  return count;
}

bool planarity_witness_check(const RootedDigraph &d) {
  const std::size_t n = static_cast<std::size_t>(d.size());
  if (n < 3)
    return true;
  return undirected_edge_count(d) <= 3 * n - 6;
}

} // namespace outbranch
