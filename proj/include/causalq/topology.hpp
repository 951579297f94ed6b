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
 * Multiloop topology model: undirected multigraphs with reference edge
 * directions, edge sets, and the classical acyclicity oracle.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace causalq {

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FixedStrategy { Marker, Exclude, None };

inline std::string to_string(FixedStrategy s) {
  switch (s) {
    case FixedStrategy::Marker: return "marker";
    case FixedStrategy::Exclude: return "exclude";
    default: return "none";
  }
}

struct Edge {
  int id;
  int from;  // tail of the reference direction (qubit state |1>)
  int to;
};

/// An assignment of a flow direction to every edge. Bit i set means edge i
/// flows along its reference direction.
struct Orientation {
  std::uint32_t bits = 0;
  int n = 0;

  bool along_reference(int edge) const { return (bits >> edge) & 1u; }

  Orientation complement() const {
    return {~bits & ((n >= 32) ? ~0u : ((1u << n) - 1u)), n};
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation& a, const Orientation& b) {
    return a.bits <=> b.bits;
  }
};

/// Optional reference metadata carried by a fixture file; values the report
/// command compares against. Absent fields are skipped.
struct ReferenceValues {
  std::optional<int> total_qubits;
  std::optional<int> depth;
  std::optional<double> theta_deg;
  std::optional<double> success;
  std::optional<long long> causal_states;
  std::optional<int> clause_count;
  std::optional<int> toffoli_gates;
  std::optional<int> not_gates;
};

struct Topology {
  std::string name;
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> sets;
  std::optional<int> fixed_edge;
  FixedStrategy fixed_strategy = FixedStrategy::None;
  int padding_qubits = 0;
  int iterations = 1;
  ReferenceValues reference;

  int edge_count() const { return static_cast<int>(edges.size()); }

  int set_of_edge(int edge_id) const {
    for (int j = 0; j < static_cast<int>(sets.size()); ++j)
      for (int e : sets[j])
        if (e == edge_id) return j;
    throw TopologyError("edge " + std::to_string(edge_id) + " not in any set");
  }

  /// Index of the set holding the fixed edge, or -1 when no edge is fixed.
  int fixed_set() const {
    if (!fixed_edge || fixed_strategy == FixedStrategy::None) return -1;
    return set_of_edge(*fixed_edge);
  }

  void validate() const;
};

inline void Topology::validate() const {
  if (vertex_count <= 0) throw TopologyError("vertex count must be positive");
  const int n = edge_count();
  if (n == 0) throw TopologyError("topology has no edges");
  if (n > 32) throw TopologyError("more than 32 edges is unsupported");
  for (int i = 0; i < n; ++i) {
    if (edges[i].id != i)
      throw TopologyError("edge ids must be 0..n-1 in order");
    if (edges[i].from < 0 || edges[i].from >= vertex_count ||
        edges[i].to < 0 || edges[i].to >= vertex_count)
      throw TopologyError("edge " + std::to_string(i) +
                          " references a vertex out of range");
    if (edges[i].from == edges[i].to)
      throw TopologyError("self-loops are not allowed");
  }
  std::vector<int> seen(n, 0);
  for (const auto& s : sets) {
    if (s.empty()) throw TopologyError("empty edge set");
    for (int e : s) {
      if (e < 0 || e >= n) throw TopologyError("set references unknown edge");
      if (seen[e]++) throw TopologyError("edge " + std::to_string(e) +
                                         " appears in two sets");
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i])
      throw TopologyError("edge " + std::to_string(i) + " is in no set");
  if (fixed_edge && (*fixed_edge < 0 || *fixed_edge >= n))
    throw TopologyError("fixed_edge is not a valid edge id");
  if (fixed_strategy != FixedStrategy::None && !fixed_edge)
    throw TopologyError("fixed_strategy requires fixed_edge");
  if (padding_qubits < 0) throw TopologyError("negative padding_qubits");
  if (iterations < 1) throw TopologyError("iterations must be >= 1");

  // Connectivity over the undirected multigraph.
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<char> visited(vertex_count, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!visited[w]) {
        visited[w] = 1;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!visited[v])
      throw TopologyError("graph is disconnected at vertex " +
                          std::to_string(v));
}

inline Topology parse_topology(const nlohmann::json& doc) {
  Topology t;
  try {
    t.name = doc.at("name").get<std::string>();
    t.vertex_count = doc.at("vertices").get<int>();
    for (const auto& e : doc.at("edges"))
      t.edges.push_back({e.at("id").get<int>(), e.at("from").get<int>(),
                         e.at("to").get<int>()});
    t.sets = doc.at("sets").get<std::vector<std::vector<int>>>();
    if (doc.contains("fixed_edge") && !doc["fixed_edge"].is_null())
      t.fixed_edge = doc["fixed_edge"].get<int>();
    const auto strategy = doc.at("fixed_strategy").get<std::string>();
    if (strategy == "marker")
      t.fixed_strategy = FixedStrategy::Marker;
    else if (strategy == "exclude")
      t.fixed_strategy = FixedStrategy::Exclude;
    else if (strategy == "none")
      t.fixed_strategy = FixedStrategy::None;
    else
      throw TopologyError("unknown fixed_strategy: " + strategy);
    t.padding_qubits = doc.value("padding_qubits", 0);
    t.iterations = doc.value("iterations", 1);
    if (doc.contains("reference")) {
      const auto& r = doc["reference"];
      auto opt_i = [&](const char* k) -> std::optional<int> {
        if (r.contains(k)) return r[k].get<int>();
        return std::nullopt;
      };
      auto opt_d = [&](const char* k) -> std::optional<double> {
        if (r.contains(k)) return r[k].get<double>();
        return std::nullopt;
      };
      t.reference.total_qubits = opt_i("total_qubits");
      t.reference.depth = opt_i("depth");
      t.reference.theta_deg = opt_d("theta_deg");
      t.reference.success = opt_d("success");
      if (r.contains("causal_states"))
        t.reference.causal_states = r["causal_states"].get<long long>();
      t.reference.clause_count = opt_i("clause_count");
      t.reference.toffoli_gates = opt_i("toffoli_gates");
      t.reference.not_gates = opt_i("not_gates");
    }
  } catch (const nlohmann::json::exception& ex) {
    throw TopologyError(std::string("malformed topology document: ") +
                        ex.what());
  }
  t.validate();
  return t;
}

inline Topology parse_topology(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw TopologyError(std::string("malformed topology document: ") +
                        ex.what());
  }
  return parse_topology(doc);
}

/// True iff the directed graph induced by the orientation has no directed
/// cycle. Straight DFS over the full vertex set, internal vertices included.
inline bool is_acyclic(const Topology& t, const Orientation& o) {
  if (o.n != t.edge_count())
    throw TopologyError("orientation length does not match edge count");
  std::vector<std::vector<int>> out(t.vertex_count);
  for (const auto& e : t.edges) {
    if (o.along_reference(e.id))
      out[e.from].push_back(e.to);
    else
      out[e.to].push_back(e.from);
  }
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<char> state(t.vertex_count, 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root = 0; root < t.vertex_count; ++root) {
    if (state[root]) continue;
    stack.emplace_back(root, 0);
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < out[v].size()) {
        int w = out[v][i++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

struct CausalSet {
  long long count = 0;
  std::vector<Orientation> members;
  bool halved = false;
};

constexpr int kExhaustiveEdgeCap = 24;

/// All acyclic orientations; restricted to bit(e0)=1 when an edge is fixed.
inline CausalSet enumerate_causal(const Topology& t) {
  const int n = t.edge_count();
  if (n > kExhaustiveEdgeCap)
    throw TopologyError("edge count exceeds exhaustive cap");
  CausalSet out;
  out.halved = t.fixed_strategy != FixedStrategy::None;
  const std::uint32_t fixed_mask =
      out.halved ? (1u << *t.fixed_edge) : 0u;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    if ((bits & fixed_mask) != fixed_mask) continue;
    Orientation o{bits, n};
    if (is_acyclic(t, o)) out.members.push_back(o);
  }
  out.count = static_cast<long long>(out.members.size());
  return out;
}

}  // namespace causalq
