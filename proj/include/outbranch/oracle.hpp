#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "outbranch/digraph.hpp"
#include "outbranch/out_branching.hpp"

namespace outbranch {

struct EnumerationBudget {
  VertexId max_n = 12;
  std::uint64_t max_count = 20'000'000;
  std::chrono::milliseconds timeout{60'000};
};

struct EnumerationStats {
  std::uint64_t count = 0;
  bool complete = false;  // false: budget hit or visitor stopped early
};

// Calls `visit` once for every spanning out-branching rooted at d.root().
// Returning false from `visit` stops the walk. Branchings are generated by
// include/exclude decisions on frontier arcs, pruning any exclusion that
// leaves a vertex unreachable, so every call reaches a complete branching.
// Throws PreconditionError if d is disconnected.
EnumerationStats enumerate_out_branchings(const RootedDigraph &d, const EnumerationBudget &budget,
                                          const std::function<bool(const OutBranching &)> &visit);

enum class Objective { leaf, internal };

const char *objective_name(Objective o);

// Leaf count or internal count of t.
int objective_value(const OutBranching &t, Objective o);

struct SolveResult {
  int best_value = 0;
  OutBranching witness;
  bool exact = false;
};

// Best value over the full enumeration; exact=false when the budget ran out
// (or n > budget.max_n, in which case the witness is a BFS tree).
SolveResult maxleaf_exact(const RootedDigraph &d, const EnumerationBudget &budget = {});
SolveResult max_internal_exact(const RootedDigraph &d, const EnumerationBudget &budget = {});

struct BranchAndBoundOptions {
  std::optional<int> target;  // stop as soon as a branching reaches this value
  std::chrono::milliseconds timeout{60'000};
};

// Exact optimum by include/exclude search on frontier arcs with an optimistic
// bound. On timeout returns the best branching found with exact=false. When
// the target is reached early, exact=false unless the value is also n-1 or
// otherwise provably optimal.
SolveResult solve_branch_and_bound(const RootedDigraph &d, Objective mode,
                                   const BranchAndBoundOptions &options = {});

struct ParentVectorTally {
  std::uint64_t count = 0;
  int max_leaves = -1;    // -1 when there is no branching
  int max_internal = -1;
};

// Definitional cross-check: every choice of one in-neighbour per non-root
// vertex, kept when the parent pointers reach the root. n <= 9.
ParentVectorTally parent_vector_tally(const RootedDigraph &d);

enum class Equivalence { equivalent, differ, inconclusive };

const char *equivalence_name(Equivalence e);

// Compares (value(before) >= k) with (value(after) >= k). Disconnected
// instances have no branching and are treated as No.
Equivalence check_equivalence(const RootedDigraph &before, const RootedDigraph &after, int k,
                              Objective mode, const BranchAndBoundOptions &options = {});

} // namespace outbranch
