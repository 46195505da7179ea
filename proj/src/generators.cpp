#include "outbranch/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace outbranch {

namespace {

struct Point {
  std::int64_t x, y;
  auto operator<=>(const Point &) const = default;
};

std::int64_t cross(const Point &o, const Point &a, const Point &b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

RootedDigraph without_root_in_arcs(VertexId n, VertexId root, std::vector<Arc> arcs) {
  std::erase_if(arcs, [&](Arc a) { return a.head == root; });
  return RootedDigraph::simplified(n, root, arcs);
}

void add_both(std::vector<Arc> &arcs, VertexId u, VertexId v) {
  arcs.push_back({u, v});
  arcs.push_back({v, u});
}

struct DisjointSets {
  std::vector<VertexId> up;
  explicit DisjointSets(VertexId n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  VertexId find(VertexId v) {
    while (up[v] != v)
      v = up[v] = up[up[v]];
    return v;
  }
  bool join(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    up[a] = b;
    return true;
  }
};

} // namespace

RootedDigraph gen_path(VertexId n) {
  std::vector<Arc> arcs;
  for (VertexId v = 1; v < n; ++v)
    arcs.push_back({v - 1, v});
  return RootedDigraph(n, 0, arcs);
}

RootedDigraph gen_star(VertexId leaves) {
  std::vector<Arc> arcs;
  for (VertexId v = 1; v <= leaves; ++v)
    arcs.push_back({0, v});
  return RootedDigraph(leaves + 1, 0, arcs);
}

RootedDigraph gen_bipath_chain(VertexId length) {
  if (length < 1)
    throw InputError("bipath-chain length must be at least 1");
  std::vector<Arc> arcs{{0, 1}, {0, length + 1}};
  for (VertexId v = 1; v <= length; ++v)
    add_both(arcs, v, v + 1);
  return RootedDigraph(length + 2, 0, arcs);
}

RootedDigraph gen_random(VertexId n, double arc_prob, Rng &rng) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n > 1) {
    std::vector<VertexId> rest(order.begin() + 1, order.end());
    rng.shuffle(rest);
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
  }
  std::vector<Arc> arcs;
  for (VertexId i = 1; i < n; ++i)
    arcs.push_back({order[rng.uniform(0, i - 1)], order[i]});
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 1; v < n; ++v)
      if (u != v && rng.chance(arc_prob))
        arcs.push_back({u, v});
  return RootedDigraph::simplified(n, 0, arcs);
}

std::vector<std::pair<VertexId, VertexId>> sweep_triangulation(VertexId n, Rng &rng) {
  if (n < 1)
    throw InputError("planar generator needs at least one vertex");
  const auto grid = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(double(n)))) + 2;
  std::set<Point> taken;
  while (static_cast<VertexId>(taken.size()) < n)
    taken.insert({rng.uniform(0, grid - 1), rng.uniform(0, grid - 1)});
  std::vector<Point> pts(taken.begin(), taken.end());

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> upper{0}, lower{0};
  for (VertexId i = 1; i < n; ++i) {
    const Point &p = pts[i];
    edges.push_back({i - 1, i});
    // Pop chain vertices strictly hidden behind the new point; every vertex
    // exposed by a pop is visible from p.
    while (upper.size() >= 2 && cross(pts[upper[upper.size() - 2]], pts[upper.back()], p) > 0) {
      upper.pop_back();
      edges.push_back({upper.back(), i});
    }
    while (lower.size() >= 2 && cross(pts[lower[lower.size() - 2]], pts[lower.back()], p) < 0) {
      lower.pop_back();
      edges.push_back({lower.back(), i});
    }
    upper.push_back(i);
    lower.push_back(i);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

RootedDigraph gen_planar(const PlanarParams &p, Rng &rng) {
  auto edges = sweep_triangulation(p.n, rng);
  const VertexId root = static_cast<VertexId>(rng.uniform(0, p.n - 1));
  std::vector<std::vector<VertexId>> adj(p.n);
  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    if (!rng.chance(p.keep_prob))
      continue;
    if (rng.chance(p.bidirect_prob))
      add_both(arcs, u, v);
    else if (rng.chance(0.5))
      arcs.push_back({u, v});
    else
      arcs.push_back({v, u});
  }
  std::vector<char> seen(p.n, 0);
  std::vector<VertexId> queue{root};
  seen[root] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (VertexId w : adj[queue[i]])
      if (!seen[w]) {
        seen[w] = 1;
        arcs.push_back({queue[i], w});
        queue.push_back(w);
      }
  return without_root_in_arcs(p.n, root, std::move(arcs));
}

RootedDigraph gen_subdivided_planar(const SubdividedParams &p, Rng &rng) {
  auto edges = sweep_triangulation(p.skeleton, rng);
  rng.shuffle(edges);
  DisjointSets sets(p.skeleton);
  std::vector<std::pair<VertexId, VertexId>> kept, spare;
  for (auto e : edges)
    (sets.join(e.first, e.second) ? kept : spare).push_back(e);
  for (VertexId i = 0; i < p.cycles && i < static_cast<VertexId>(spare.size()); ++i)
    kept.push_back(spare[i]);

  VertexId n = p.skeleton;
  std::vector<Arc> arcs;
  for (auto [u, v] : kept) {
    VertexId inner = static_cast<VertexId>(rng.uniform(0, p.max_subdivision));
    VertexId prev = u;
    for (VertexId j = 0; j < inner; ++j) {
      add_both(arcs, prev, n);
      prev = n++;
    }
    add_both(arcs, prev, v);
  }
  return without_root_in_arcs(n, 0, std::move(arcs));
}

RootedDigraph gen_degenerate(const DegenerateParams &p, Rng &rng) {
  if (p.core < 1 || p.degeneracy < 1)
    throw InputError("degenerate generator needs core >= 1 and degeneracy >= 1");
  std::vector<Arc> arcs;
  for (VertexId i = 1; i < p.core; ++i) {
    VertexId parent = static_cast<VertexId>(rng.uniform(0, i - 1));
    arcs.push_back({parent, i});
    std::set<VertexId> earlier{parent};
    int extra = static_cast<int>(rng.uniform(0, p.degeneracy - 1));
    for (int t = 0; t < extra && static_cast<VertexId>(earlier.size()) < i; ++t) {
      VertexId j = static_cast<VertexId>(rng.uniform(0, i - 1));
      if (!earlier.insert(j).second)
        continue;
      if (j == 0 || rng.chance(0.5))
        arcs.push_back({j, i});
      else
        arcs.push_back({i, j});
    }
  }
  std::vector<std::vector<VertexId>> pool(std::max(p.pool, 1));
  for (auto &nbhd : pool) {
    int size = static_cast<int>(rng.uniform(1, std::min<std::int64_t>(p.degeneracy, p.core)));
    std::set<VertexId> chosen;
    while (static_cast<int>(chosen.size()) < size)
      chosen.insert(static_cast<VertexId>(rng.uniform(0, p.core - 1)));
    nbhd.assign(chosen.begin(), chosen.end());
  }
  for (VertexId w = p.core; w < p.core + p.pendants; ++w) {
    const auto &nbhd = pool[rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1)];
    for (VertexId x : nbhd) {
      arcs.push_back({x, w});
      if (x != 0 && rng.chance(p.back_prob))
        arcs.push_back({w, x});
    }
  }
  return RootedDigraph::simplified(p.core + p.pendants, 0, arcs);
}

} // namespace outbranch
