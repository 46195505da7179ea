#include "outbranch/lob_reducer.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "outbranch/connectivity.hpp"

namespace outbranch {

namespace {

void require_connected(const RootedDigraph &d, int rule) {
  if (!is_connected(d))
    throw PreconditionError("rule " + std::to_string(rule) +
                            " needs every vertex reachable from the root");
}

bool is_cut_vertex(const RootedDigraph &d, VertexId v, ReachWorkspace &ws) {
  if (v == d.root() || d.out_degree(v) == 0)
    return false;
  ws.reset();
  ws.block(v);
  return ws.search(d, d.root()) < d.size() - 1;
}

// Internal vertex of a proper bipath: exactly two neighbours, each joined to
// it in both directions.
bool proper_internal(const RootedDigraph &d, VertexId v) {
  if (d.in_degree(v) != 2 || d.out_degree(v) != 2)
    return false;
  auto in = d.in(v);
  auto out = d.out(v);
  return std::equal(in.begin(), in.end(), out.begin());
}

VertexId other_neighbor(const RootedDigraph &d, VertexId v, VertexId not_this) {
  auto out = d.out(v);
  return out[0] == not_this ? out[1] : out[0];
}

// Removing N^-(x) \ {y} separates y from the root. Per-pair definitional
// check used by the apply_* guards.
bool rule4_guard(const RootedDigraph &d, VertexId x, VertexId y) {
  if (y == d.root() || !d.has_arc(y, x))
    return false;
  ReachWorkspace ws(d.size());
  for (VertexId z : d.in(x)) {
    if (z == y)
      continue;
    if (z == d.root())
      return true;
    ws.block(z);
  }
  ws.search(d, d.root());
  return !ws.reached(y);
}

bool valid_proper_bipath(const RootedDigraph &d, std::span<const VertexId> p) {
  if (p.size() != 5)
    return false;
  for (VertexId v : p)
    if (!d.valid(v))
      return false;
  std::array<VertexId, 5> sorted;
  std::copy(p.begin(), p.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (!proper_internal(d, p[i]))
      return false;
    if (!d.has_arc(p[i], p[i - 1]) || !d.has_arc(p[i], p[i + 1]))
      return false;
  }
  return true;
}

std::optional<RuleApplication> match_rule_1(const RootedDigraph &d) {
  auto missing = unreachable_vertices(d);
  if (missing.empty())
    return std::nullopt;
  return RuleApplication{1, {missing.front()}, RuleAction::resolve_no, {}};
}

std::optional<RuleApplication> match_rule_2(const RootedDigraph &d, ReachWorkspace &ws) {
  for (VertexId v = 0; v < d.size(); ++v) {
    if (d.in_degree(v) != 1 && d.out_degree(v) != 1)
      continue;
    if (!is_cut_vertex(d, v, ws))
      continue;
    Arc a = d.in_degree(v) == 1 ? Arc{d.in(v)[0], v} : Arc{v, d.out(v)[0]};
    return RuleApplication{2, {v}, RuleAction::contract, a};
  }
  return std::nullopt;
}

std::optional<RuleApplication> match_rule_3(const RootedDigraph &d) {
  std::optional<std::array<VertexId, 5>> best;
  for (VertexId mid = 0; mid < d.size(); ++mid) {
    if (!proper_internal(d, mid))
      continue;
    auto nb = d.out(mid);
    for (int flip = 0; flip < 2; ++flip) {
      VertexId second = nb[flip], fourth = nb[1 - flip];
      if (!proper_internal(d, second) || !proper_internal(d, fourth))
        continue;
      std::array<VertexId, 5> seq{other_neighbor(d, second, mid), second, mid, fourth,
                                  other_neighbor(d, fourth, mid)};
      if (!valid_proper_bipath(d, seq))
        continue;
      if (!best || seq < *best)
        best = seq;
    }
  }
  if (!best)
    return std::nullopt;
  const auto &s = *best;
  return RuleApplication{3, {s.begin(), s.end()}, RuleAction::contract, {s[1], s[2]}};
}

std::optional<RuleApplication> match_rule_4(const RootedDigraph &d, ReachWorkspace &ws) {
  for (VertexId x = 0; x < d.size(); ++x) {
    auto in = d.in(x);
    if (in.size() < 2)
      continue;
    if (std::binary_search(in.begin(), in.end(), d.root())) {
      // Removing the root cuts off every other in-neighbour.
      for (VertexId y : in)
        if (y != d.root())
          return RuleApplication{4, {x, y}, RuleAction::remove_arc, {y, x}};
      continue;
    }
    // A shortest path to y that avoids N^-(x) \ {y} reaches y last, so it
    // passes only through vertices that avoid all of N^-(x).
    ws.reset();
    for (VertexId z : in)
      ws.block(z);
    ws.search(d, d.root());
    for (VertexId y : in) {
      bool entered = false;
      for (VertexId z : d.in(y))
        if (ws.reached(z)) {
          entered = true;
          break;
        }
      if (!entered)
        return RuleApplication{4, {x, y}, RuleAction::remove_arc, {y, x}};
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match_rule_5(const RootedDigraph &d, const CutStructure &cs) {
  // Smallest cut-edge head per tail; cut_edges is sorted.
  std::vector<VertexId> first_head(d.size(), kNoVertex);
  for (auto it = cs.cut_edges.rbegin(); it != cs.cut_edges.rend(); ++it)
    first_head[it->tail] = it->head;
  for (VertexId x1 = 0; x1 < d.size(); ++x1) {
    if (first_head[x1] == kNoVertex)
      continue;
    for (VertexId x2 : d.out(x1)) {
      if (first_head[x2] == kNoVertex || !d.has_arc(x2, x1))
        continue;
      return RuleApplication{5,
                             {x1, first_head[x1], x2, first_head[x2]},
                             RuleAction::contract,
                             {x1, x2}};
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> match_rule_6(const RootedDigraph &d, const CutStructure &cs) {
  for (Arc a : cs.cut_edges)
    if (d.has_arc(a.head, a.tail))
      return RuleApplication{6, {a.tail, a.head}, RuleAction::remove_arc, {a.head, a.tail}};
  return std::nullopt;
}

RuleResult finish(const LobInstance &inst, RuleApplication applied) {
  Surgery s = applied.action == RuleAction::contract ? contract_arc(inst.graph, applied.arc)
                                                     : delete_arc(inst.graph, applied.arc);
  return {{std::move(s.graph), inst.k}, std::move(s.old_to_new), std::move(applied)};
}

const char *action_word(RuleAction a) {
  switch (a) {
  case RuleAction::contract:
    return "contract";
  case RuleAction::remove_arc:
    return "delete";
  case RuleAction::resolve_no:
    return "no";
  }
  return "?";
}

} // namespace

std::string format_application(const RuleApplication &a) {
  std::ostringstream out;
  out << "RULE " << a.rule << " LOCUS";
  for (VertexId v : a.locus)
    out << ' ' << v;
  out << " ACTION " << action_word(a.action) << ' ' << a.arc.tail << ' ' << a.arc.head;
  return out.str();
}

std::string ReductionTrace::to_text() const {
  std::string text;
  for (const auto &step : steps)
    text += format_application(step.applied) + "\n";
  return text;
}

std::vector<VertexId> ReductionTrace::original_to_current(VertexId original_size) const {
  std::vector<VertexId> map(original_size);
  for (VertexId v = 0; v < original_size; ++v)
    map[v] = v;
  for (const auto &step : steps)
    map = compose_maps(map, step.old_to_new);
  return map;
}

std::vector<RuleApplication> parse_trace(std::string_view text) {
  std::vector<RuleApplication> result;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream in(line);
    std::string word;
    if (!(in >> word) || word[0] == '#')
      continue;
    auto fail = [&](const std::string &why) {
      return InputError("trace line " + std::to_string(line_no) + ": " + why);
    };
    if (word != "RULE")
      throw fail("expected RULE");
    RuleApplication a;
    if (!(in >> a.rule) || a.rule < 2 || a.rule > 6)
      throw fail("rule id must be 2..6");
    if (!(in >> word) || word != "LOCUS")
      throw fail("expected LOCUS");
    while (in >> word && word != "ACTION")
      a.locus.push_back(static_cast<VertexId>(std::stol(word)));
    if (word != "ACTION")
      throw fail("expected ACTION");
    if (!(in >> word))
      throw fail("missing action");
    if (word == "contract")
      a.action = RuleAction::contract;
    else if (word == "delete")
      a.action = RuleAction::remove_arc;
    else
      throw fail("unknown action '" + word + "'");
    if (!(in >> a.arc.tail >> a.arc.head))
      throw fail("missing arc endpoints");
    result.push_back(std::move(a));
  }
  return result;
}

std::optional<RuleApplication> match_rule(const RootedDigraph &d, int rule) {
  if (rule == 1)
    return match_rule_1(d);
  if (rule < 1 || rule > 6)
    throw InputError("no rule " + std::to_string(rule));
  require_connected(d, rule);
  ReachWorkspace ws(d.size());
  switch (rule) {
  case 2:
    return match_rule_2(d, ws);
  case 3:
    return match_rule_3(d);
  case 4:
    return match_rule_4(d, ws);
  case 5:
    return match_rule_5(d, cut_structure(d));
  default:
    return match_rule_6(d, cut_structure(d));
  }
}

std::optional<RuleApplication> find_rule(const LobInstance &inst) {
  const RootedDigraph &d = inst.graph;
  if (auto m = match_rule_1(d))
    return m;
  ReachWorkspace ws(d.size());
  if (auto m = match_rule_2(d, ws))
    return m;
  if (auto m = match_rule_3(d))
    return m;
  if (auto m = match_rule_4(d, ws))
    return m;
  CutStructure cs = cut_structure(d);
  if (auto m = match_rule_5(d, cs))
    return m;
  return match_rule_6(d, cs);
}

KernelOutcome apply_rule_1(const LobInstance &inst) {
  auto m = match_rule_1(inst.graph);
  if (!m)
    throw PreconditionError("rule 1: every vertex is reachable from the root");
  KernelOutcome out;
  out.verdict = Verdict::no;
  out.k = inst.k;
  out.reason = "unreachable vertex " + std::to_string(m->locus.front());
  return out;
}

RuleResult apply_rule_2(const LobInstance &inst, VertexId v) {
  const RootedDigraph &d = inst.graph;
  require_connected(d, 2);
  if (!d.valid(v))
    throw InputError("vertex " + std::to_string(v) + " out of range");
  ReachWorkspace ws(d.size());
  if (!is_cut_vertex(d, v, ws))
    throw PreconditionError("rule 2: " + std::to_string(v) + " is not a cut-vertex");
  Arc a;
  if (d.in_degree(v) == 1)
    a = {d.in(v)[0], v};
  else if (d.out_degree(v) == 1)
    a = {v, d.out(v)[0]};
  else
    throw PreconditionError("rule 2: cut-vertex " + std::to_string(v) +
                            " has neither in- nor out-degree 1");
  return finish(inst, {2, {v}, RuleAction::contract, a});
}

RuleResult apply_rule_3(const LobInstance &inst, std::span<const VertexId> bipath) {
  require_connected(inst.graph, 3);
  if (!valid_proper_bipath(inst.graph, bipath))
    throw PreconditionError("rule 3: locus is not a proper bipath of length 4");
  return finish(inst, {3,
                       {bipath.begin(), bipath.end()},
                       RuleAction::contract,
                       {bipath[1], bipath[2]}});
}

RuleResult apply_rule_4(const LobInstance &inst, VertexId x, VertexId y) {
  const RootedDigraph &d = inst.graph;
  require_connected(d, 4);
  if (!d.valid(x) || !d.valid(y))
    throw InputError("rule 4: vertex out of range");
  if (!rule4_guard(d, x, y))
    throw PreconditionError("rule 4: removing N^-(" + std::to_string(x) + ") \\ {" +
                            std::to_string(y) + "} does not cut " + std::to_string(y));
  return finish(inst, {4, {x, y}, RuleAction::remove_arc, {y, x}});
}

RuleResult apply_rule_5(const LobInstance &inst, Arc first, Arc second) {
  const RootedDigraph &d = inst.graph;
  require_connected(d, 5);
  CutStructure cs = cut_structure(d);
  if (!cs.is_cut_edge(first) || !cs.is_cut_edge(second))
    throw PreconditionError("rule 5: locus arcs must both be cut-edges");
  if (first.tail == second.tail || !d.has_arc(first.tail, second.tail) ||
      !d.has_arc(second.tail, first.tail))
    throw PreconditionError("rule 5: cut-edge tails are not joined in both directions");
  return finish(inst, {5,
                       {first.tail, first.head, second.tail, second.head},
                       RuleAction::contract,
                       {first.tail, second.tail}});
}

RuleResult apply_rule_6(const LobInstance &inst, Arc cut_edge) {
  const RootedDigraph &d = inst.graph;
  require_connected(d, 6);
  if (!cut_structure(d).is_cut_edge(cut_edge))
    throw PreconditionError("rule 6: locus is not a cut-edge");
  if (!d.has_arc(cut_edge.head, cut_edge.tail))
    throw PreconditionError("rule 6: reverse arc absent");
  return finish(inst, {6,
                       {cut_edge.tail, cut_edge.head},
                       RuleAction::remove_arc,
                       {cut_edge.head, cut_edge.tail}});
}

RuleResult apply_rule(const LobInstance &inst, const RuleApplication &a) {
  auto need = [&](std::size_t n) {
    if (a.locus.size() != n)
      throw InputError("rule " + std::to_string(a.rule) + " expects " + std::to_string(n) +
                       " locus ids");
  };
  switch (a.rule) {
  case 2:
    need(1);
    return apply_rule_2(inst, a.locus[0]);
  case 3:
    need(5);
    return apply_rule_3(inst, a.locus);
  case 4:
    need(2);
    return apply_rule_4(inst, a.locus[0], a.locus[1]);
  case 5:
    need(4);
    return apply_rule_5(inst, {a.locus[0], a.locus[1]}, {a.locus[2], a.locus[3]});
  case 6:
    need(2);
    return apply_rule_6(inst, {a.locus[0], a.locus[1]});
  default:
    throw InputError("rule " + std::to_string(a.rule) + " cannot be applied as a step");
  }
}

LobReduction reduce_to_fixpoint(const LobInstance &inst) {
  LobReduction result;
  LobInstance current = inst;
  const std::size_t budget = static_cast<std::size_t>(inst.graph.size()) +
                             inst.graph.arc_count() + 1;
  for (std::size_t iteration = 0;; ++iteration) {
    if (iteration > budget)
      throw std::logic_error("reduction did not terminate within n + m steps");
    auto match = find_rule(current);
    if (!match) {
      result.outcome.verdict = Verdict::reduced;
      result.outcome.reason = "no rule applies";
      break;
    }
    if (match->rule == 1) {
      result.outcome = apply_rule_1(current);
      break;
    }
    RuleResult r = apply_rule(current, *match);
    result.trace.steps.push_back({std::move(r.applied), std::move(r.old_to_new)});
    current = std::move(r.instance);
  }
  result.outcome.graph = current.graph;
  result.outcome.k = current.k;
  result.original_to_current = result.trace.original_to_current(inst.graph.size());
  return result;
}

LobInstance replay(const LobInstance &original, std::span<const RuleApplication> steps) {
  LobInstance current = original;
  for (const auto &step : steps) {
    RuleResult r = apply_rule(current, step);
    if (r.applied.arc != step.arc || r.applied.action != step.action)
      throw InputError("trace step '" + format_application(step) +
                       "' does not match the rule's action");
    current = std::move(r.instance);
  }
  return current;
}

} // namespace outbranch
