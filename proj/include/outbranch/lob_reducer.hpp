#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "outbranch/digraph.hpp"
#include "outbranch/out_branching.hpp"

namespace outbranch {

// k-Leaf Out-Branching instance: is there an out-branching with >= k leaves?
struct LobInstance {
  RootedDigraph graph;
  int k = 0;
};

enum class RuleAction { contract, remove_arc, resolve_no };

struct RuleApplication {
  int rule = 0;                  // 1..6
  std::vector<VertexId> locus;   // matched vertices, ids at time of application
  RuleAction action = RuleAction::contract;
  Arc arc;                       // arc contracted or deleted

  friend bool operator==(const RuleApplication &, const RuleApplication &) = default;
};

struct TraceStep {
  RuleApplication applied;
  std::vector<VertexId> old_to_new;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  // One line per step: RULE <id> LOCUS <ids> ACTION <contract|delete> <u> <v>
  std::string to_text() const;

  // Maps vertices of the original instance to the reduced one.
  std::vector<VertexId> original_to_current(VertexId original_size) const;
};

std::string format_application(const RuleApplication &a);

// Parses the text form back into applications. Throws InputError with the
// offending line number.
std::vector<RuleApplication> parse_trace(std::string_view text);

// Lowest-numbered applicable rule, with the lexicographically smallest locus
// under the current numbering; nullopt when Rules 1-6 are all inapplicable.
std::optional<RuleApplication> find_rule(const LobInstance &inst);

// Smallest match of one specific rule, ignoring rule priority.
std::optional<RuleApplication> match_rule(const RootedDigraph &d, int rule);

struct RuleResult {
  LobInstance instance;
  std::vector<VertexId> old_to_new;
  RuleApplication applied;
};

// Each apply_rule_* re-checks its guard and throws PreconditionError if it
// does not hold.
KernelOutcome apply_rule_1(const LobInstance &inst);
RuleResult apply_rule_2(const LobInstance &inst, VertexId cut_vertex);
RuleResult apply_rule_3(const LobInstance &inst, std::span<const VertexId> bipath);
RuleResult apply_rule_4(const LobInstance &inst, VertexId x, VertexId y);
RuleResult apply_rule_5(const LobInstance &inst, Arc first, Arc second);
RuleResult apply_rule_6(const LobInstance &inst, Arc cut_edge);

// Dispatches on a.rule (2..6), using the locus recorded in `a`.
RuleResult apply_rule(const LobInstance &inst, const RuleApplication &a);

struct LobReduction {
  KernelOutcome outcome;
  ReductionTrace trace;
  std::vector<VertexId> original_to_current;
};

// Applies find_rule/apply_rule until no rule matches or Rule 1 fires.
LobReduction reduce_to_fixpoint(const LobInstance &inst);

// Re-applies recorded actions to the original instance.
LobInstance replay(const LobInstance &original, std::span<const RuleApplication> steps);

} // namespace outbranch
