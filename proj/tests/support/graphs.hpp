#pragma once

#include <initializer_list>
#include <vector>

#include "outbranch/digraph.hpp"

namespace testing_graphs {

inline outbranch::RootedDigraph make(outbranch::VertexId n,
                                     std::initializer_list<outbranch::Arc> arcs,
                                     outbranch::VertexId root = 0) {
  std::vector<outbranch::Arc> list(arcs);
  return outbranch::RootedDigraph(n, root, list);
}

inline std::vector<outbranch::VertexId> ids(std::initializer_list<outbranch::VertexId> v) {
  return v;
}

} // namespace testing_graphs
