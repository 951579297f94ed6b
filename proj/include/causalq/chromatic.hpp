// Copyright 2026 causalq contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Acyclic-orientation counting through the chromatic polynomial at -1,
 * evaluated by deletion-contraction. Counting oracle independent of the
 * orientation brute force.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "causalq/topology.hpp"

namespace causalq {

constexpr int kChromaticEdgeCap = 20;

namespace detail {

// Simple graph as a sorted edge list of vertex pairs (u < v).
using EdgeList = std::vector<std::pair<int, int>>;

inline long long acyclic_count_rec(EdgeList g, int vertices) {
  if (g.empty()) return 1;  // a(empty graph) = 1 regardless of vertex count
  auto [u, v] = g.back();
  g.pop_back();
  // a(G) = a(G - e) + a(G / e); contraction merges v into u and drops
  // duplicate edges (chromatic counting lives on simple graphs).
  long long deleted = acyclic_count_rec(g, vertices);
  std::set<std::pair<int, int>> contracted;
  for (auto [a, b] : g) {
    if (a == v) a = u;
    if (b == v) b = u;
    if (a == b) continue;
    contracted.insert({std::min(a, b), std::max(a, b)});
  }
  EdgeList gc(contracted.begin(), contracted.end());
  return deleted + acyclic_count_rec(std::move(gc), vertices - 1);
}

}  // namespace detail

/// |P(G, -1)| for the simple graph underlying the topology. Equals the
/// number of acyclic orientations of a simple graph; the topology graphs
/// here are simple because multi-edges always carry internal vertices.
inline long long chromatic_acyclic_count(const Topology& t) {
  if (t.edge_count() > kChromaticEdgeCap)
    throw TopologyError("edge count exceeds deletion-contraction cap");
  std::set<std::pair<int, int>> simple;
  for (const auto& e : t.edges)
    simple.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
  detail::EdgeList g(simple.begin(), simple.end());
  return detail::acyclic_count_rec(std::move(g), t.vertex_count);
}

}  // namespace causalq
