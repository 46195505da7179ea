#include "outbranch/oracle.hpp"

#include <algorithm>

namespace outbranch {

namespace {

using Clock = std::chrono::steady_clock;

// Include/exclude search over frontier arcs. Invariant: every vertex outside
// the tree is reachable from the tree through arcs that are not excluded.
class FrontierSearch {
public:
  explicit FrontierSearch(const RootedDigraph &d) : d_(d), n_(d.size()) {
    if (!is_connected(d))
      throw PreconditionError("out-branchings need every vertex reachable from the root");
    out_offset_.assign(n_ + 1, 0);
    for (VertexId u = 0; u < n_; ++u)
      out_offset_[u + 1] = out_offset_[u] + d.out_degree(u);
    in_ids_.resize(n_);
    for (VertexId u = 0; u < n_; ++u) {
      auto out = d.out(u);
      for (std::size_t i = 0; i < out.size(); ++i)
        in_ids_[out[i]].push_back(out_offset_[u] + static_cast<int>(i));
    }
    tails_.resize(out_offset_[n_]);
    for (VertexId u = 0; u < n_; ++u)
      for (int a = out_offset_[u]; a < out_offset_[u + 1]; ++a)
        tails_[a] = u;
    excluded_.assign(tails_.size(), 0);
    in_tree_.assign(n_, 0);
    children_.assign(n_, 0);
    parent_.assign(n_, kNoVertex);
    mark_.assign(n_, 0);
    in_tree_[d.root()] = 1;
    tree_size_ = 1;
  }

protected:
  struct Choice {
    int arc = -1;
    VertexId head = kNoVertex;
  };

  VertexId head_of(int arc) const {
    VertexId u = tails_[arc];
    return d_.out(u)[arc - out_offset_[u]];
  }

  void include(int arc) {
    VertexId u = tails_[arc], v = head_of(arc);
    in_tree_[v] = 1;
    parent_[v] = u;
    if (children_[u]++ == 0)
      ++internal_;
    ++tree_size_;
  }

  void undo_include(int arc) {
    VertexId u = tails_[arc], v = head_of(arc);
    in_tree_[v] = 0;
    parent_[v] = kNoVertex;
    if (--children_[u] == 0)
      --internal_;
    --tree_size_;
  }

  // After excluding an arc into v, v must still be reachable from the tree;
  // everything else then is too.
  bool still_reachable(VertexId v) {
    ++stamp_;
    stack_.clear();
    stack_.push_back(v);
    mark_[v] = stamp_;
    while (!stack_.empty()) {
      VertexId x = stack_.back();
      stack_.pop_back();
      for (int a : in_ids_[x]) {
        if (excluded_[a])
          continue;
        VertexId z = tails_[a];
        if (in_tree_[z])
          return true;
        if (mark_[z] != stamp_) {
          mark_[z] = stamp_;
          stack_.push_back(z);
        }
      }
    }
    return false;
  }

  bool live_frontier(int a) const { return !excluded_[a] && in_tree_[tails_[a]]; }

  OutBranching snapshot() const { return {d_.root(), parent_}; }

  const RootedDigraph &d_;
  VertexId n_;
  std::vector<int> out_offset_;
  std::vector<std::vector<int>> in_ids_;
  std::vector<VertexId> tails_;
  std::vector<char> excluded_;
  std::vector<char> in_tree_;
  std::vector<int> children_;
  std::vector<VertexId> parent_;
  VertexId tree_size_ = 0;
  int internal_ = 0;

private:
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<VertexId> stack_;
};

class Enumerator : public FrontierSearch {
public:
  Enumerator(const RootedDigraph &d, const EnumerationBudget &budget,
             const std::function<bool(const OutBranching &)> &visit)
      : FrontierSearch(d), budget_(budget), visit_(visit),
        deadline_(Clock::now() + budget.timeout) {}

  EnumerationStats run() {
    stopped_ = false;
    walk();
    return {count_, !stopped_};
  }

private:
  void walk() {
    if (stopped_)
      return;
    if (tree_size_ == n_) {
      ++count_;
      if (!visit_(snapshot()))
        stopped_ = true;
      else if (count_ >= budget_.max_count)
        stopped_ = true;
      else if ((count_ & 1023) == 0 && Clock::now() > deadline_)
        stopped_ = true;
      return;
    }
    int arc = -1;
    for (VertexId v = 0; v < n_ && arc < 0; ++v) {
      if (in_tree_[v])
        continue;
      for (int a : in_ids_[v])
        if (live_frontier(a)) {
          arc = a;
          break;
        }
    }
    include(arc);
    walk();
    undo_include(arc);
    excluded_[arc] = 1;
    if (still_reachable(head_of(arc)))
      walk();
    excluded_[arc] = 0;
  }

  const EnumerationBudget &budget_;
  const std::function<bool(const OutBranching &)> &visit_;
  Clock::time_point deadline_;
  std::uint64_t count_ = 0;
  bool stopped_ = false;
};

class BranchAndBound : public FrontierSearch {
public:
  BranchAndBound(const RootedDigraph &d, Objective mode, const BranchAndBoundOptions &options)
      : FrontierSearch(d), mode_(mode), options_(options),
        deadline_(Clock::now() + options.timeout), live_in_(n_, 0), sole_tail_(n_, kNoVertex),
        forced_(n_, 0) {}

  SolveResult run() {
    timed_out_ = false;
    hit_target_ = false;
    search();
    SolveResult result;
    result.best_value = best_;
    result.witness = best_tree_;
    int ceiling = n_ == 1 ? (mode_ == Objective::leaf ? 1 : 0) : n_ - 1;
    result.exact = (!timed_out_ && !hit_target_) || best_ == ceiling;
    return result;
  }

private:
  int current_value() const {
    return mode_ == Objective::leaf ? n_ - internal_ : internal_;
  }

  int upper_bound() {
    if (mode_ == Objective::leaf) {
      // Every vertex outside the tree whose only live in-arc comes from z
      // forces z to be internal.
      std::fill(live_in_.begin(), live_in_.end(), 0);
      for (VertexId y = 0; y < n_; ++y) {
        if (in_tree_[y])
          continue;
        for (int a : in_ids_[y])
          if (!excluded_[a]) {
            ++live_in_[y];
            sole_tail_[y] = tails_[a];
          }
      }
      int extra = 0;
      ++forced_stamp_;
      for (VertexId y = 0; y < n_; ++y) {
        if (in_tree_[y] || live_in_[y] != 1)
          continue;
        VertexId z = sole_tail_[y];
        if (children_[z] == 0 && forced_[z] != forced_stamp_) {
          forced_[z] = forced_stamp_;
          ++extra;
        }
      }
      return n_ - internal_ - extra;
    }
    // A new internal vertex needs a child outside the current tree.
    int outside = n_ - tree_size_;
    int candidates = 0;
    for (VertexId u = 0; u < n_; ++u) {
      if (in_tree_[u] && children_[u] > 0)
        continue;
      for (int a = out_offset_[u]; a < out_offset_[u + 1]; ++a)
        if (!excluded_[a] && !in_tree_[head_of(a)]) {
          ++candidates;
          break;
        }
    }
    return std::min(internal_ + std::min(outside, candidates), std::max(n_ - 1, 0));
  }

  // Frontier arc to branch on, taken first in the include branch.
  int pick_arc() const {
    int fallback = -1, best_score = -1;
    for (VertexId v = 0; v < n_; ++v) {
      if (in_tree_[v])
        continue;
      int onward = 0;
      for (int a = out_offset_[v]; a < out_offset_[v + 1]; ++a)
        onward += !excluded_[a] && !in_tree_[head_of(a)];
      for (int a : in_ids_[v]) {
        if (!live_frontier(a))
          continue;
        bool tail_internal = children_[tails_[a]] > 0;
        int score;
        if (mode_ == Objective::leaf)
          score = tail_internal ? 1000 : onward;
        else
          score = tail_internal ? 0 : 1 + onward;
        if (score > best_score) {
          best_score = score;
          fallback = a;
        }
      }
    }
    return fallback;
  }

  bool out_of_time() {
    if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_)
      timed_out_ = true;
    return timed_out_;
  }

  void search() {
    if (hit_target_ || out_of_time())
      return;
    if (tree_size_ == n_) {
      int value = current_value();
      if (value > best_) {
        best_ = value;
        best_tree_ = snapshot();
        if (options_.target && best_ >= *options_.target)
          hit_target_ = true;
      }
      return;
    }
    if (upper_bound() <= best_)
      return;
    int arc = pick_arc();
    include(arc);
    search();
    undo_include(arc);
    excluded_[arc] = 1;
    if (still_reachable(head_of(arc)))
      search();
    excluded_[arc] = 0;
  }

  Objective mode_;
  const BranchAndBoundOptions &options_;
  Clock::time_point deadline_;
  std::vector<int> live_in_;
  std::vector<VertexId> sole_tail_;
  std::vector<std::uint32_t> forced_;
  std::uint32_t forced_stamp_ = 0;
  int best_ = -1;
  OutBranching best_tree_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  bool hit_target_ = false;
};

SolveResult exact_by_enumeration(const RootedDigraph &d, const EnumerationBudget &budget,
                                 Objective mode) {
  if (d.size() > budget.max_n) {
    OutBranching t = bfs_branching(d);
    return {objective_value(t, mode), t, false};
  }
  SolveResult result;
  result.best_value = -1;
  auto stats = enumerate_out_branchings(d, budget, [&](const OutBranching &t) {
    int value = objective_value(t, mode);
    if (value > result.best_value) {
      result.best_value = value;
      result.witness = t;
    }
    return true;
  });
  result.exact = stats.complete;
  return result;
}

} // namespace

EnumerationStats enumerate_out_branchings(const RootedDigraph &d, const EnumerationBudget &budget,
                                          const std::function<bool(const OutBranching &)> &visit) {
  return Enumerator(d, budget, visit).run();
}

const char *objective_name(Objective o) { return o == Objective::leaf ? "leaf" : "internal"; }

int objective_value(const OutBranching &t, Objective o) {
  return o == Objective::leaf ? t.leaf_count() : t.internal_count();
}

SolveResult maxleaf_exact(const RootedDigraph &d, const EnumerationBudget &budget) {
  return exact_by_enumeration(d, budget, Objective::leaf);
}

SolveResult max_internal_exact(const RootedDigraph &d, const EnumerationBudget &budget) {
  return exact_by_enumeration(d, budget, Objective::internal);
}

SolveResult solve_branch_and_bound(const RootedDigraph &d, Objective mode,
                                   const BranchAndBoundOptions &options) {
  return BranchAndBound(d, mode, options).run();
}

ParentVectorTally parent_vector_tally(const RootedDigraph &d) {
  const VertexId n = d.size();
  if (n > 9)
    throw PreconditionError("parent_vector_tally: n > 9");
  ParentVectorTally tally;
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<int> choice(n, 0);
  for (VertexId v = 0; v < n; ++v)
    if (v != d.root() && d.in_degree(v) == 0)
      return tally;
  std::vector<char> state(n);
  while (true) {
    for (VertexId v = 0; v < n; ++v)
      parent[v] = v == d.root() ? kNoVertex : d.in(v)[choice[v]];
    // 0 unknown, 1 on the current walk, 2 reaches the root
    std::fill(state.begin(), state.end(), 0);
    state[d.root()] = 2;
    bool acyclic = true;
    for (VertexId v = 0; v < n && acyclic; ++v) {
      VertexId x = v;
      while (state[x] == 0) {
        state[x] = 1;
        x = parent[x];
      }
      if (state[x] == 1)
        acyclic = false;
      for (VertexId y = v; state[y] == 1; y = parent[y])
        state[y] = 2;
    }
    if (acyclic) {
      ++tally.count;
      std::vector<char> has_child(n, 0);
      for (VertexId v = 0; v < n; ++v)
        if (parent[v] != kNoVertex)
          has_child[parent[v]] = 1;
      int internal = static_cast<int>(std::count(has_child.begin(), has_child.end(), 1));
      tally.max_internal = std::max(tally.max_internal, internal);
      tally.max_leaves = std::max(tally.max_leaves, n - internal);
    }
    VertexId v = 0;
    for (; v < n; ++v) {
      if (v == d.root())
        continue;
      if (++choice[v] < d.in_degree(v))
        break;
      choice[v] = 0;
    }
    if (v == n)
      break;
  }
  return tally;
}

const char *equivalence_name(Equivalence e) {
  switch (e) {
  case Equivalence::equivalent:
    return "equivalent";
  case Equivalence::differ:
    return "differ";
  case Equivalence::inconclusive:
    return "inconclusive";
  }
  return "?";
}

Equivalence check_equivalence(const RootedDigraph &before, const RootedDigraph &after, int k,
                              Objective mode, const BranchAndBoundOptions &options) {
  auto decide = [&](const RootedDigraph &d) -> std::optional<bool> {
    if (!is_connected(d))
      return false;
    BranchAndBoundOptions o = options;
    o.target = k;
    SolveResult r = solve_branch_and_bound(d, mode, o);
    if (r.best_value >= k)
      return true;
    if (r.exact)
      return false;
    return std::nullopt;
  };
  auto a = decide(before);
  auto b = decide(after);
  if (!a || !b)
    return Equivalence::inconclusive;
  return *a == *b ? Equivalence::equivalent : Equivalence::differ;
}

} // namespace outbranch
