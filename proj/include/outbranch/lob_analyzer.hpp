#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "outbranch/digraph.hpp"
#include "outbranch/lob_reducer.hpp"

namespace outbranch {

// A structural property that must hold on a reduced instance did not. Points
// at a bug in the rule engine rather than at the input.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Vertices of D merged into one vertex of D_c. Two members exactly when a
// lonely cut-edge (tail, head) was contracted.
struct Bag {
  std::vector<VertexId> members;  // sorted
  VertexId head = kNoVertex;
  VertexId tail = kNoVertex;
};

struct ContractedGraph {
  RootedDigraph original;   // D
  RootedDigraph graph;      // D_c
  std::vector<Bag> bags;    // indexed by D_c vertex
  std::vector<VertexId> origin;  // D vertex -> D_c vertex
};

// Contracts every lonely cut-edge of d. D_c vertices are numbered by the
// smallest member of their bag. Throws PreconditionError if a rule still
// applies to d.
ContractedGraph build_contracted(const RootedDigraph &d);

// In-degree >= 3, or some in-arc whose reverse is absent.
std::vector<VertexId> special_vertices(const RootedDigraph &dc);

// Non-special size-2 bags whose tail has no D-arc into a special bag.
std::vector<VertexId> isolated_vertices(const ContractedGraph &dc);

struct BipathDecomposition {
  std::vector<char> in_seed;                   // S, indexed by D_c vertex
  std::vector<std::vector<VertexId>> paths;    // u1..up, extremities in S
};

// Splits V(D_c) \ S into maximal weak bipaths. Each path is oriented so that
// it is lexicographically no larger than its reverse; paths are sorted.
// Throws PreconditionError if S misses the root or a special vertex, and
// InvariantError if the graph outside S is not a union of such bipaths.
BipathDecomposition decompose_bipaths(const RootedDigraph &dc, std::span<const VertexId> seed);

// Empty when properties (i)-(iii) and the weak bipath shape hold.
std::vector<std::string> decomposition_defects(const RootedDigraph &dc,
                                               const BipathDecomposition &dec);

struct HardBipath {
  std::vector<VertexId> vertices;  // extremities first and last
  std::vector<VertexId> outside;   // O(P'): out-neighbours of the internal vertices, minus them
  bool master = false;

  std::size_t internal_count() const { return vertices.size() - 2; }
};

struct BipathClassification {
  std::vector<HardBipath> bipaths;
  int slave_count = 0;
};

// Groups bipaths by extremity pair and O(P'); the two lexicographically
// smallest internal sequences per group are masters.
BipathClassification classify_masters_slaves(const BipathDecomposition &dec,
                                             const RootedDigraph &dc);

struct LobAnalysis {
  ContractedGraph contracted;
  std::vector<VertexId> special;
  std::vector<VertexId> isolated;
  std::vector<VertexId> easy;  // root, special and isolated
  BipathDecomposition hard;    // decomposition over the easy vertices
  BipathClassification classes;
};

LobAnalysis analyze(const RootedDigraph &reduced);

struct LobCertificate {
  int k = 0;
  int special = 0;
  int isolated = 0;
  int slaves = 0;
  int cut_vertices = 0;  // of D_c
  int special_bound = 0;   // ceil(special / 60)
  int isolated_bound = 0;  // ceil(isolated / 180)
  std::optional<double> accept_constant;
  bool yes = false;
  std::string reason;  // which bound fired, empty when undecided
};

// Yes iff special >= 60k, isolated >= 180k, slaves >= k, or (with a
// constant c) the reduced graph has more than c*k vertices.
LobCertificate certificate(int k, const LobAnalysis &analysis,
                           std::optional<double> accept_constant = std::nullopt);

struct HardBipathRecord {
  std::size_t internal = 0;
  std::size_t outside = 0;
  bool within_bound = true;  // internal <= 10|O| + 6
  bool master = false;
};

struct SizeReport {
  std::size_t vertices = 0;
  std::size_t contracted_vertices = 0;
  std::size_t easy = 0;
  std::size_t hard = 0;
  std::vector<HardBipathRecord> bipaths;
  std::map<std::size_t, std::size_t> outside_histogram;  // |O(P')| -> count
  std::size_t distinct_neighbourhoods = 0;               // among bipath-minor B-side
  int minor_degeneracy = 0;
  long long minor_heavy_sum = 0;  // heavy degree sum on the bipath minor with d = its degeneracy
  long long minor_heavy_bound = 0;
  std::size_t bound_violations = 0;
};

SizeReport size_report(const LobAnalysis &analysis);

// Structural lemmas of a reduced instance, each failure described once:
// bag sizes, cut-edge heads of in-degree 1, cut-edge tails not heads,
// arcs between bags entering tails, linked bags with one arc each way,
// D_c cut-edges all branching, |V(D)| <= 2|V(D_c)|, root out-degree >= 2,
// decomposition properties for S = {root} ∪ sp and S = easy, and the
// per-bipath hard vertex bound.
std::vector<std::string> structural_defects(const LobAnalysis &analysis);

} // namespace outbranch
