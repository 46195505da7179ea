#include "outbranch/iob_kernel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "outbranch/sparsity.hpp"

namespace outbranch {

namespace {

std::string join_ids(std::span<const VertexId> ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

std::vector<VertexId> undirected_neighbours(const RootedDigraph &d, VertexId v) {
  std::vector<VertexId> nb(d.out(v).begin(), d.out(v).end());
  nb.insert(nb.end(), d.in(v).begin(), d.in(v).end());
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return nb;
}

} // namespace

bool is_vertex_cover(const RootedDigraph &d, std::span<const VertexId> cover) {
  std::vector<char> in(d.size(), 0);
  for (VertexId v : cover) {
    if (!d.valid(v))
      return false;
    in[v] = 1;
  }
  for (VertexId u = 0; u < d.size(); ++u) {
    if (in[u])
      continue;
    for (VertexId v : d.out(u))
      if (!in[v])
        return false;
  }
  return true;
}

VcOrSolution vc_or_solution(const IobInstance &inst) {
  const RootedDigraph &d = inst.graph;
  if (!is_connected(d))
    throw PreconditionError("vc_or_solution: some vertex is unreachable from the root");
  VcOrSolution res;
  res.tree = bfs_branching(d);
  auto &parent = res.tree.parent;
  std::vector<int> cc = res.tree.child_counts();
  bool moved = true;
  while (moved) {
    moved = false;
    for (VertexId u = 0; u < d.size(); ++u) {
      if (cc[u] != 0)
        continue;
      for (VertexId v : d.out(u)) {
        if (cc[v] != 0 || cc[parent[v]] < 2)
          continue;
        --cc[parent[v]];
        parent[v] = u;
        ++cc[u];
        ++res.moves;
        moved = true;
        break;  // u is internal now
      }
    }
  }
  if (res.tree.internal_count() >= inst.k) {
    res.solution = res.tree;
    return res;
  }
  std::vector<char> in_cover(d.size(), 0);
  in_cover[d.root()] = 1;
  for (VertexId u = 0; u < d.size(); ++u) {
    if (cc[u] > 0) {
      in_cover[u] = 1;
      continue;
    }
    for (VertexId v : d.out(u))
      if (cc[v] == 0)
        in_cover[v] = 1;
  }
  for (VertexId v = 0; v < d.size(); ++v)
    if (in_cover[v])
      res.cover.push_back(v);
  if (!is_vertex_cover(d, res.cover))
    throw std::logic_error("vc_or_solution: cover misses an arc");
  return res;
}

std::string AuxiliaryBipartite::left_name(int i) const {
  const LeftVertex &l = left[i];
  if (l.y == kNoVertex)
    return std::to_string(l.x);
  return "(" + std::to_string(l.x) + "," + std::to_string(l.y) + ")";
}

AuxiliaryBipartite build_aux_graph(const RootedDigraph &d, std::span<const VertexId> U) {
  if (!is_vertex_cover(d, U))
    throw PreconditionError("build_aux_graph: U is not a vertex cover");
  AuxiliaryBipartite b;
  b.cover.assign(U.begin(), U.end());
  std::sort(b.cover.begin(), b.cover.end());
  b.cover.erase(std::unique(b.cover.begin(), b.cover.end()), b.cover.end());
  std::vector<char> in_u(d.size(), 0);
  for (VertexId x : b.cover)
    in_u[x] = 1;
  for (VertexId w = 0; w < d.size(); ++w)
    if (!in_u[w])
      b.right.push_back(w);

  std::map<std::pair<VertexId, VertexId>, std::vector<int>> edges;
  for (std::size_t r = 0; r < b.right.size(); ++r) {
    VertexId w = b.right[r];
    for (VertexId x : d.in(w)) {
      edges[{x, kNoVertex}].push_back(static_cast<int>(r));
      for (VertexId y : d.out(w))
        edges[{x, y}].push_back(static_cast<int>(r));
    }
  }
  b.right_adj.resize(b.right.size());
  for (auto &[key, ws] : edges) {
    int li = static_cast<int>(b.left.size());
    b.left.push_back({key.first, key.second});
    for (int r : ws)
      b.right_adj[r].push_back(li);
    b.left_adj.push_back(std::move(ws));
  }
  return b;
}

std::vector<std::string> crown_defects(const AuxiliaryBipartite &b, const CrownDecomposition &c) {
  std::vector<std::string> out;
  int nr = static_cast<int>(b.right.size()), nl = static_cast<int>(b.left.size());
  // side: 1 = C_m, 2 = C_u; a vertex listed twice is reported.
  std::vector<int> side(nr, 0), hside(nl, 0);
  auto mark = [&](std::span<const int> part, int tag) -> bool {
    for (int r : part) {
      if (r < 0 || r >= nr)
        return false;
      if (side[r])
        out.push_back("crown vertex " + std::to_string(b.right[r]) + " listed twice");
      side[r] = tag;
    }
    return true;
  };
  if (!mark(c.crown_matched, 1) || !mark(c.crown_unmatched, 2))
    return {"crown vertex out of range"};
  for (int h : c.head) {
    if (h < 0 || h >= nl)
      return {"head vertex out of range"};
    ++hside[h];
  }
  for (int h = 0; h < nl; ++h)
    if (hside[h] > 1)
      out.push_back("head vertex " + b.left_name(h) + " listed twice");
  if (c.crown_unmatched.empty())
    out.push_back("C_u is empty");

  for (int r = 0; r < nr; ++r) {
    if (!side[r])
      continue;
    for (int l : b.right_adj[r])
      if (!hside[l]) {
        out.push_back("edge from crown vertex " + std::to_string(b.right[r]) + " to " +
                      b.left_name(l) + " outside H");
        break;
      }
  }

  std::vector<int> mr(nr, 0), ml(nl, 0);
  for (auto [r, l] : c.matching) {
    if (r < 0 || r >= nr || l < 0 || l >= nl) {
      out.push_back("matching pair out of range");
      continue;
    }
    if (!std::binary_search(b.right_adj[r].begin(), b.right_adj[r].end(), l))
      out.push_back("matching pair " + std::to_string(b.right[r]) + "-" + b.left_name(l) +
                    " is not an edge");
    ++mr[r];
    ++ml[l];
  }
  for (int r = 0; r < nr; ++r)
    if ((side[r] == 1) != (mr[r] == 1) || mr[r] > 1)
      out.push_back("vertex " + std::to_string(b.right[r]) + " matched inconsistently");
  for (int l = 0; l < nl; ++l)
    if ((hside[l] == 1) != (ml[l] == 1) || ml[l] > 1)
      out.push_back("head " + b.left_name(l) + " matched inconsistently");
  return out;
}

CrownDecomposition crown_in_class(const AuxiliaryBipartite &b, std::span<const int> I) {
  std::vector<int> nb;
  for (int r : I)
    nb.insert(nb.end(), b.right_adj[r].begin(), b.right_adj[r].end());
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  if (I.size() <= 2 * nb.size())
    throw PreconditionError("crown_in_class: |I| = " + std::to_string(I.size()) +
                            " is not larger than 2|N(I)| = " + std::to_string(2 * nb.size()));

  std::vector<int> match_r(b.right.size(), -1), match_l(b.left.size(), -1);
  std::vector<int> seen(b.left.size(), -1);
  int stamp = 0;
  // Augmenting path search (Kuhn); recursion depth is at most |N(I)|.
  auto augment = [&](auto &&self, int r) -> bool {
    for (int l : b.right_adj[r]) {
      if (seen[l] == stamp)
        continue;
      seen[l] = stamp;
      if (match_l[l] < 0 || self(self, match_l[l])) {
        match_l[l] = r;
        match_r[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int r : I) {
    ++stamp;
    augment(augment, r);
  }

  // Alternating reachability from the unmatched vertices of I.
  std::vector<char> in_c(b.right.size(), 0), in_h(b.left.size(), 0);
  std::vector<int> queue;
  for (int r : I)
    if (match_r[r] < 0 && !in_c[r]) {
      in_c[r] = 1;
      queue.push_back(r);
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int r = queue[qi];
    for (int l : b.right_adj[r]) {
      if (in_h[l])
        continue;
      in_h[l] = 1;
      int partner = match_l[l];
      if (partner < 0)
        throw std::logic_error("crown_in_class: matching is not maximum");
      if (!in_c[partner]) {
        in_c[partner] = 1;
        queue.push_back(partner);
      }
    }
  }

  CrownDecomposition c;
  for (int r = 0; r < static_cast<int>(b.right.size()); ++r) {
    if (!in_c[r])
      continue;
    if (match_r[r] < 0) {
      c.crown_unmatched.push_back(r);
    } else {
      c.crown_matched.push_back(r);
      c.matching.push_back({r, match_r[r]});
    }
  }
  for (int l = 0; l < static_cast<int>(b.left.size()); ++l)
    if (in_h[l])
      c.head.push_back(l);
  return c;
}

CrownRemoval apply_crown_rule(const IobInstance &inst, const AuxiliaryBipartite &b,
                              const CrownDecomposition &c) {
  auto defects = crown_defects(b, c);
  if (!defects.empty())
    throw PreconditionError("apply_crown_rule: " + defects.front());
  CrownRemoval res;
  for (int r : c.crown_unmatched)
    res.removed.push_back(b.right[r]);
  std::sort(res.removed.begin(), res.removed.end());
  Surgery s = remove_vertices(inst.graph, res.removed);
  res.instance = {std::move(s.graph), inst.k};
  res.old_to_new = std::move(s.old_to_new);
  return res;
}

std::string IobTrace::to_text() const {
  std::ostringstream os;
  for (const CrownStep &s : steps)
    os << "CROWN class=" << join_ids(s.neighbourhood) << " removed=" << join_ids(s.removed)
       << '\n';
  return os.str();
}

OutBranching lift_branching(const RootedDigraph &original, const OutBranching &reduced,
                            std::span<const VertexId> current_to_original,
                            std::span<const VertexId> removal_order) {
  OutBranching t;
  t.root = original.root();
  t.parent.assign(original.size(), kNoVertex);
  std::vector<char> placed(original.size(), 0);
  std::vector<int> children(original.size(), 0);
  for (VertexId v = 0; v < reduced.size(); ++v) {
    VertexId ov = current_to_original[v];
    placed[ov] = 1;
    if (reduced.parent[v] != kNoVertex) {
      VertexId op = current_to_original[reduced.parent[v]];
      t.parent[ov] = op;
      ++children[op];
    }
  }
  for (auto it = removal_order.rbegin(); it != removal_order.rend(); ++it) {
    VertexId w = *it;
    VertexId pick = kNoVertex;
    for (VertexId x : original.in(w)) {
      if (!placed[x])
        continue;
      if (pick == kNoVertex || (children[pick] > 0 && children[x] == 0))
        pick = x;
    }
    if (pick == kNoVertex)
      throw std::logic_error("lift_branching: removed vertex " + std::to_string(w) +
                             " has no placed in-neighbour");
    t.parent[w] = pick;
    ++children[pick];
    placed[w] = 1;
  }
  return t;
}

int default_threshold(const RootedDigraph &d) {
  return 2 * degeneracy(underlying_graph(d)).degeneracy;
}

IobRound iob_round(const IobInstance &inst, int threshold) {
  IobRound round;
  round.search = vc_or_solution(inst);
  if (round.search.solution) {
    round.kind = IobRound::Kind::solved;
    return round;
  }
  const RootedDigraph &d = inst.graph;
  const AuxiliaryBipartite &b = round.aux = build_aux_graph(d, round.search.cover);
  IobReport &rep = round.report;
  rep.threshold = threshold;
  rep.cover = b.cover.size();
  rep.cover_within_bound = static_cast<long long>(b.cover.size()) <= 2LL * inst.k - 1;
  std::map<std::vector<VertexId>, std::vector<int>> classes;
  for (int r = 0; r < static_cast<int>(b.right.size()); ++r) {
    auto nb = undirected_neighbours(d, b.right[r]);
    int deg = static_cast<int>(nb.size());
    if (deg > threshold)
      rep.heavy_sum += deg;
    if (deg < threshold) {
      ++rep.small;
      classes[nb].push_back(r);
    } else {
      ++rep.big;
    }
  }
  rep.heavy_bound = static_cast<long long>(threshold) * static_cast<long long>(b.cover.size());

  for (auto &[key, members] : classes) {
    std::vector<int> nbs;
    for (int r : members)
      nbs.insert(nbs.end(), b.right_adj[r].begin(), b.right_adj[r].end());
    std::sort(nbs.begin(), nbs.end());
    nbs.erase(std::unique(nbs.begin(), nbs.end()), nbs.end());
    if (members.size() > 2 * nbs.size()) {
      round.kind = IobRound::Kind::crown;
      round.neighbourhood = key;
      round.crown = crown_in_class(b, members);
      round.removal = apply_crown_rule(inst, b, round.crown);
      return round;
    }
    std::size_t n = key.size();
    rep.classes.push_back({key, members.size(), nbs.size(), members.size() <= 2 * (n * n + n)});
  }
  round.kind = IobRound::Kind::fixpoint;
  return round;
}

IobKernelResult kernelize_iob(const IobInstance &inst, std::optional<int> threshold) {
  IobKernelResult res;
  const RootedDigraph &input = inst.graph;
  int tau = threshold ? *threshold : default_threshold(input);
  res.report.threshold = tau;
  res.outcome.k = inst.k;

  IobInstance cur = inst;
  res.current_to_original.resize(input.size());
  for (VertexId v = 0; v < input.size(); ++v)
    res.current_to_original[v] = v;
  std::vector<VertexId> removal_order;
  int rounds = 0;

  auto finish = [&](Verdict v, std::string reason) {
    res.outcome.verdict = v;
    res.outcome.reason = std::move(reason);
    res.outcome.graph = cur.graph;
    res.report.rounds = rounds;
    return res;
  };

  while (true) {
    ++rounds;
    if (!is_connected(cur.graph))
      return finish(Verdict::no, "some vertex is unreachable from the root");
    IobRound round = iob_round(cur, tau);
    if (round.kind == IobRound::Kind::solved) {
      const OutBranching &t = *round.search.solution;
      res.outcome.witness = lift_branching(input, t, res.current_to_original, removal_order);
      return finish(Verdict::yes,
                    "out-branching with " + std::to_string(t.internal_count()) +
                        " internal vertices");
    }
    if (round.kind == IobRound::Kind::fixpoint) {
      res.report = std::move(round.report);
      return finish(Verdict::reduced, "no crown applies");
    }
    CrownRemoval &cr = *round.removal;
    CrownStep step;
    for (VertexId x : round.neighbourhood)
      step.neighbourhood.push_back(res.current_to_original[x]);
    for (VertexId w : cr.removed) {
      step.removed.push_back(res.current_to_original[w]);
      removal_order.push_back(res.current_to_original[w]);
    }
    res.trace.steps.push_back(std::move(step));
    std::vector<VertexId> next(cr.instance.graph.size(), kNoVertex);
    for (VertexId v = 0; v < cur.graph.size(); ++v)
      if (cr.old_to_new[v] != kNoVertex)
        next[cr.old_to_new[v]] = res.current_to_original[v];
    res.current_to_original = std::move(next);
    cur = std::move(cr.instance);
  }
}

} // namespace outbranch
