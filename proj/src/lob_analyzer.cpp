#include "outbranch/lob_analyzer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "outbranch/connectivity.hpp"
#include "outbranch/sparsity.hpp"

namespace outbranch {

namespace {

std::string arc_text(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<char> flags(VertexId n, std::span<const VertexId> members) {
  std::vector<char> f(n, 0);
  for (VertexId v : members)
    f[v] = 1;
  return f;
}

} // namespace

ContractedGraph build_contracted(const RootedDigraph &d) {
  if (auto m = find_rule({d, 0}))
    throw PreconditionError("contracted graph needs a reduced instance; rule " +
                            std::to_string(m->rule) + " applies");
  const VertexId n = d.size();
  CutStructure cs = cut_structure(d);
  auto lonely = lonely_cut_edges(cs.cut_edges);

  std::vector<VertexId> partner(n, kNoVertex);
  std::vector<Arc> lonely_of(n);
  for (Arc a : lonely) {
    if (partner[a.tail] != kNoVertex || partner[a.head] != kNoVertex)
      throw InvariantError("lonely cut-edges " + arc_text(a.tail, a.head) +
                           " and another share a vertex: bag of size three");
    partner[a.tail] = a.head;
    partner[a.head] = a.tail;
    lonely_of[a.tail] = lonely_of[a.head] = a;
  }

  ContractedGraph result;
  result.original = d;
  result.origin.assign(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    if (result.origin[v] != kNoVertex)
      continue;
    Bag bag;
    const auto id = static_cast<VertexId>(result.bags.size());
    result.origin[v] = id;
    if (partner[v] == kNoVertex) {
      bag.members = {v};
      bag.head = bag.tail = v;
    } else {
      result.origin[partner[v]] = id;
      bag.members = {v, partner[v]};
      bag.tail = lonely_of[v].tail;
      bag.head = lonely_of[v].head;
    }
    result.bags.push_back(std::move(bag));
  }
  std::vector<Arc> arcs;
  for (Arc a : d.arcs()) {
    VertexId u = result.origin[a.tail], w = result.origin[a.head];
    if (u != w)
      arcs.push_back({u, w});
  }
  result.graph = RootedDigraph::simplified(static_cast<VertexId>(result.bags.size()),
                                           result.origin[d.root()], arcs);
  return result;
}

std::vector<VertexId> special_vertices(const RootedDigraph &dc) {
  std::vector<VertexId> result;
  for (VertexId v = 0; v < dc.size(); ++v) {
    bool special = dc.in_degree(v) >= 3;
    for (VertexId u : dc.in(v))
      special = special || !dc.has_arc(v, u);
    if (special)
      result.push_back(v);
  }
  return result;
}

std::vector<VertexId> isolated_vertices(const ContractedGraph &dc) {
  auto special = flags(dc.graph.size(), special_vertices(dc.graph));
  std::vector<VertexId> result;
  for (VertexId v = 0; v < dc.graph.size(); ++v) {
    const Bag &bag = dc.bags[v];
    if (bag.members.size() != 2 || special[v])
      continue;
    bool touches_special = false;
    for (VertexId w : dc.original.out(bag.tail))
      touches_special = touches_special || special[dc.origin[w]];
    if (!touches_special)
      result.push_back(v);
  }
  return result;
}

BipathDecomposition decompose_bipaths(const RootedDigraph &dc, std::span<const VertexId> seed) {
  const VertexId n = dc.size();
  BipathDecomposition dec;
  dec.in_seed.assign(n, 0);
  for (VertexId v : seed) {
    if (!dc.valid(v))
      throw InputError("seed vertex " + std::to_string(v) + " out of range");
    dec.in_seed[v] = 1;
  }
  if (!dec.in_seed[dc.root()])
    throw PreconditionError("seed set must contain the root");
  for (VertexId v : special_vertices(dc))
    if (!dec.in_seed[v])
      throw PreconditionError("seed set misses special vertex " + std::to_string(v));

  for (VertexId v = 0; v < n; ++v) {
    if (dec.in_seed[v])
      continue;
    if (dc.in_degree(v) != 2)
      throw InvariantError("rule-engine bug: vertex " + std::to_string(v) +
                           " outside the seed set has in-degree " +
                           std::to_string(dc.in_degree(v)));
    for (VertexId u : dc.in(v))
      if (!dc.has_arc(v, u))
        throw InvariantError("rule-engine bug: in-arc " + arc_text(u, v) + " has no reverse");
  }

  std::vector<char> done(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (dec.in_seed[v] || done[v])
      continue;
    done[v] = 1;
    // walk away from v through each of its two in-neighbours
    std::vector<VertexId> side[2];
    for (int s = 0; s < 2; ++s) {
      VertexId prev = v, cur = dc.in(v)[s];
      while (!dec.in_seed[cur]) {
        if (cur == v)
          throw InvariantError("rule-engine bug: bipath through " + std::to_string(v) +
                               " closes into a cycle outside the seed set");
        done[cur] = 1;
        side[s].push_back(cur);
        auto in = dc.in(cur);
        VertexId next = in[0] == prev ? in[1] : in[0];
        prev = cur;
        cur = next;
      }
      side[s].push_back(cur);
    }
    std::vector<VertexId> path(side[0].rbegin(), side[0].rend());
    path.push_back(v);
    path.insert(path.end(), side[1].begin(), side[1].end());
    if (path.front() == path.back())
      throw InvariantError("rule-engine bug: bipath through " + std::to_string(v) +
                           " has both extremities at " + std::to_string(path.front()));
    std::vector<VertexId> reversed(path.rbegin(), path.rend());
    dec.paths.push_back(std::min(path, reversed));
  }
  std::sort(dec.paths.begin(), dec.paths.end());
  return dec;
}

std::vector<std::string> decomposition_defects(const RootedDigraph &dc,
                                               const BipathDecomposition &dec) {
  std::vector<std::string> defects;
  std::vector<int> covered(dc.size(), 0);
  for (std::size_t i = 0; i < dec.paths.size(); ++i) {
    const auto &p = dec.paths[i];
    const std::string name = "bipath " + std::to_string(i);
    if (p.size() < 3) {
      defects.push_back(name + " has no internal vertex");
      continue;
    }
    if (!dec.in_seed[p.front()] || !dec.in_seed[p.back()])
      defects.push_back(name + ": extremity outside the seed set (ii)");
    if (p.front() == p.back())
      defects.push_back(name + ": extremities coincide (ii)");
    std::set<VertexId> on_path(p.begin(), p.end());
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      VertexId u = p[j];
      ++covered[u];
      if (dec.in_seed[u])
        defects.push_back(name + ": internal vertex " + std::to_string(u) + " in the seed set (i)");
      std::vector<VertexId> expect{p[j - 1], p[j + 1]};
      std::sort(expect.begin(), expect.end());
      auto in = dc.in(u);
      if (!std::equal(in.begin(), in.end(), expect.begin(), expect.end()) ||
          !dc.has_arc(u, p[j - 1]) || !dc.has_arc(u, p[j + 1]))
        defects.push_back(name + ": vertex " + std::to_string(u) + " breaks the weak bipath shape");
      for (VertexId w : dc.out(u))
        if (!on_path.count(w) && !dec.in_seed[w])
          defects.push_back(name + ": out-neighbour " + std::to_string(w) + " of " +
                            std::to_string(u) + " outside the seed set (iii)");
    }
  }
  for (VertexId v = 0; v < dc.size(); ++v)
    if (!dec.in_seed[v] && covered[v] != 1)
      defects.push_back("vertex " + std::to_string(v) + " is internal to " +
                        std::to_string(covered[v]) + " bipaths (i)");
  return defects;
}

BipathClassification classify_masters_slaves(const BipathDecomposition &dec,
                                             const RootedDigraph &dc) {
  BipathClassification result;
  for (const auto &p : dec.paths) {
    HardBipath hb;
    hb.vertices = p;
    std::set<VertexId> internal(p.begin() + 1, p.end() - 1);
    std::set<VertexId> outside;
    for (VertexId u : internal)
      for (VertexId w : dc.out(u))
        if (!internal.count(w))
          outside.insert(w);
    hb.outside.assign(outside.begin(), outside.end());
    result.bipaths.push_back(std::move(hb));
  }
  using Key = std::tuple<VertexId, VertexId, std::vector<VertexId>>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < result.bipaths.size(); ++i) {
    const auto &hb = result.bipaths[i];
    VertexId a = hb.vertices.front(), b = hb.vertices.back();
    groups[{std::min(a, b), std::max(a, b), hb.outside}].push_back(i);
  }
  for (auto &[key, members] : groups) {
    auto internal_seq = [&](std::size_t i) {
      const auto &v = result.bipaths[i].vertices;
      return std::vector<VertexId>(v.begin() + 1, v.end() - 1);
    };
    std::sort(members.begin(), members.end(),
              [&](std::size_t x, std::size_t y) { return internal_seq(x) < internal_seq(y); });
    for (std::size_t j = 0; j < members.size(); ++j)
      result.bipaths[members[j]].master = j < 2;
    result.slave_count += static_cast<int>(members.size() > 2 ? members.size() - 2 : 0);
  }
  return result;
}

LobAnalysis analyze(const RootedDigraph &reduced) {
  LobAnalysis a;
  a.contracted = build_contracted(reduced);
  const RootedDigraph &dc = a.contracted.graph;
  a.special = special_vertices(dc);
  a.isolated = isolated_vertices(a.contracted);
  a.easy = a.special;
  a.easy.insert(a.easy.end(), a.isolated.begin(), a.isolated.end());
  a.easy.push_back(dc.root());
  std::sort(a.easy.begin(), a.easy.end());
  a.easy.erase(std::unique(a.easy.begin(), a.easy.end()), a.easy.end());
  a.hard = decompose_bipaths(dc, a.easy);
  a.classes = classify_masters_slaves(a.hard, dc);
  return a;
}

LobCertificate certificate(int k, const LobAnalysis &analysis,
                           std::optional<double> accept_constant) {
  LobCertificate c;
  c.k = k;
  c.special = static_cast<int>(analysis.special.size());
  c.isolated = static_cast<int>(analysis.isolated.size());
  c.slaves = analysis.classes.slave_count;
  c.cut_vertices = static_cast<int>(cut_structure(analysis.contracted.graph).cut_vertices().size());
  c.special_bound = (c.special + 59) / 60;
  c.isolated_bound = (c.isolated + 179) / 180;
  c.accept_constant = accept_constant;
  const long long kk = k;
  if (c.special >= 60 * kk)
    c.reason = "special >= 60k";
  else if (c.isolated >= 180 * kk)
    c.reason = "isolated >= 180k";
  else if (c.slaves >= kk)
    c.reason = "slaves >= k";
  else if (accept_constant &&
           static_cast<double>(analysis.contracted.original.size()) > *accept_constant * k)
    c.reason = "more than c*k vertices";
  c.yes = !c.reason.empty();
  return c;
}

SizeReport size_report(const LobAnalysis &analysis) {
  SizeReport r;
  r.vertices = static_cast<std::size_t>(analysis.contracted.original.size());
  r.contracted_vertices = static_cast<std::size_t>(analysis.contracted.graph.size());
  r.easy = analysis.easy.size();
  r.hard = r.contracted_vertices - r.easy;

  std::vector<VertexId> easy_index(analysis.contracted.graph.size(), kNoVertex);
  for (std::size_t i = 0; i < analysis.easy.size(); ++i)
    easy_index[analysis.easy[i]] = static_cast<VertexId>(i);
  std::vector<std::vector<VertexId>> minor;
  std::set<std::vector<VertexId>> neighbourhoods;
  for (const auto &hb : analysis.classes.bipaths) {
    HardBipathRecord rec;
    rec.internal = hb.internal_count();
    rec.outside = hb.outside.size();
    rec.within_bound = rec.internal <= 10 * rec.outside + 6;
    rec.master = hb.master;
    r.bound_violations += !rec.within_bound;
    r.bipaths.push_back(rec);
    ++r.outside_histogram[rec.outside];
    std::vector<VertexId> nb;
    for (VertexId w : hb.outside)
      if (easy_index[w] != kNoVertex)
        nb.push_back(easy_index[w]);
    neighbourhoods.insert(nb);
    minor.push_back(std::move(nb));
  }
  r.distinct_neighbourhoods = neighbourhoods.size();
  r.minor_degeneracy = bipartite_degeneracy(analysis.easy.size(), minor);
  auto heavy = heavy_degree_sum(analysis.easy.size(), minor, r.minor_degeneracy);
  r.minor_heavy_sum = heavy.sum;
  r.minor_heavy_bound = heavy.bound;
  return r;
}

std::vector<std::string> structural_defects(const LobAnalysis &analysis) {
  std::vector<std::string> defects;
  const ContractedGraph &cg = analysis.contracted;
  const RootedDigraph &d = cg.original;
  const RootedDigraph &dc = cg.graph;

  for (std::size_t b = 0; b < cg.bags.size(); ++b)
    if (cg.bags[b].members.size() > 2)
      defects.push_back("bag " + std::to_string(b) + " has more than two members");

  CutStructure cs = cut_structure(d);
  std::vector<char> is_cut_head(d.size(), 0);
  for (Arc a : cs.cut_edges) {
    is_cut_head[a.head] = 1;
    if (d.in_degree(a.head) != 1)
      defects.push_back("cut-edge " + arc_text(a.tail, a.head) + " enters a vertex of in-degree " +
                        std::to_string(d.in_degree(a.head)));
  }
  for (Arc a : cs.cut_edges)
    if (is_cut_head[a.tail])
      defects.push_back("cut-edge " + arc_text(a.tail, a.head) +
                        " starts at the head of another cut-edge");

  for (VertexId u = 0; u < d.size(); ++u) {
    if (u != d.root() && !cs.is_cut_vertex[u])
      continue;
    for (VertexId v : private_neighbors(d, u))
      if (d.in_degree(v) != 1)
        defects.push_back("private neighbour " + std::to_string(v) + " of " + std::to_string(u) +
                          " has in-degree " + std::to_string(d.in_degree(v)));
  }

  std::map<std::pair<VertexId, VertexId>, int> between;
  for (Arc a : d.arcs()) {
    VertexId A = cg.origin[a.tail], B = cg.origin[a.head];
    if (A == B)
      continue;
    ++between[{A, B}];
    if (a.head != cg.bags[B].tail)
      defects.push_back("arc " + arc_text(a.tail, a.head) + " enters bag " + std::to_string(B) +
                        " away from its tail");
  }
  for (const auto &[pair, count] : between) {
    auto back = between.find({pair.second, pair.first});
    if (back == between.end())
      continue;
    if (count != 1 || back->second != 1)
      defects.push_back("linked bags " + std::to_string(pair.first) + " and " +
                        std::to_string(pair.second) + " have " + std::to_string(count) +
                        " arcs one way and " + std::to_string(back->second) + " the other");
  }

  if (!lonely_cut_edges(cut_structure(dc).cut_edges).empty() && dc.size() > 1)
    defects.push_back("contracted graph still has a lonely cut-edge");
  if (d.size() > 2 * dc.size())
    defects.push_back("|V(D)| > 2|V(D_c)|");
  if (d.size() >= 3) {
    if (d.out_degree(d.root()) < 2)
      defects.push_back("root has out-degree " + std::to_string(d.out_degree(d.root())));
    auto special = flags(dc.size(), analysis.special);
    for (VertexId v : d.out(d.root())) {
      if (!cs.is_cut_edge({d.root(), v}))
        defects.push_back("root arc to " + std::to_string(v) + " is not a cut-edge");
      if (!special[cg.origin[v]])
        defects.push_back("out-neighbour " + std::to_string(v) + " of the root is not special");
    }
  }

  std::vector<VertexId> base = analysis.special;
  base.push_back(dc.root());
  try {
    for (auto &text : decomposition_defects(dc, decompose_bipaths(dc, base)))
      defects.push_back("S = root+special: " + text);
  } catch (const InvariantError &e) {
    defects.push_back(std::string("S = root+special: ") + e.what());
  }
  for (auto &text : decomposition_defects(dc, analysis.hard))
    defects.push_back("S = easy: " + text);
  for (const auto &hb : analysis.classes.bipaths)
    if (hb.internal_count() > 10 * hb.outside.size() + 6)
      defects.push_back("hard bipath from " + std::to_string(hb.vertices.front()) + " has " +
                        std::to_string(hb.internal_count()) + " hard vertices, |O| = " +
                        std::to_string(hb.outside.size()));
  return defects;
}

} // namespace outbranch
