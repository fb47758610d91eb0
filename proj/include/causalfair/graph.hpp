#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "causalfair/error.hpp"

namespace causalfair {

// Analyst-assigned variable roles. "protected" is the sensitive attribute A,
// of which a graph may declare at most one; "proxy" and "resolving" are the
// two dual label families the audits reason about; "latent" covers noise
// variables drawn as explicit nodes.
enum class NodeRole { protected_attribute, proxy, resolving, feature, outcome, predictor, latent };

inline const char* role_name(NodeRole r) noexcept {
  switch (r) {
    case NodeRole::protected_attribute: return "protected";
    case NodeRole::proxy: return "proxy";
    case NodeRole::resolving: return "resolving";
    case NodeRole::feature: return "feature";
    case NodeRole::outcome: return "outcome";
    case NodeRole::predictor: return "predictor";
    case NodeRole::latent: return "latent";
  }
  return "?";
}

inline std::optional<NodeRole> role_from_name(const std::string& s) noexcept {
  if (s == "protected") return NodeRole::protected_attribute;
  if (s == "proxy") return NodeRole::proxy;
  if (s == "resolving") return NodeRole::resolving;
  if (s == "feature") return NodeRole::feature;
  if (s == "outcome") return NodeRole::outcome;
  if (s == "predictor") return NodeRole::predictor;
  if (s == "latent") return NodeRole::latent;
  return std::nullopt;
}

struct NodeDecl {
  std::string name;
  NodeRole role;
};

// A directed path V_1 -> ... -> V_k, k >= 2, all nodes distinct.
struct DirectedPath {
  std::vector<std::string> nodes;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i) out += " -> ";
      out += nodes[i];
    }
    return out;
  }

  friend bool operator==(const DirectedPath& a, const DirectedPath& b) { return a.nodes == b.nodes; }
};

struct AuditVerdict {
  bool flagged = false;
  std::vector<DirectedPath> witnesses;  // empty iff !flagged
};

// Immutable role-labeled DAG. Node iteration follows declaration order; all
// operations on a built graph are pure, so instances can be shared freely
// across threads.
class CausalGraph {
 public:
  static CausalGraph build(const std::vector<NodeDecl>& nodes,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
    CausalGraph g;
    g.names_.reserve(nodes.size());
    for (const auto& decl : nodes) {
      if (g.index_.count(decl.name)) fail(Errc::duplicate_node, "node '" + decl.name + "' declared twice");
      g.index_.emplace(decl.name, static_cast<int>(g.names_.size()));
      g.names_.push_back(decl.name);
      g.roles_.push_back(decl.role);
    }
    int protected_count = 0;
    for (std::size_t i = 0; i < g.roles_.size(); ++i) {
      if (g.roles_[i] == NodeRole::protected_attribute && ++protected_count > 1)
        fail(Errc::multiple_protected, "second protected node '" + g.names_[i] + "'");
    }
    const int n = static_cast<int>(g.names_.size());
    g.parents_.assign(n, {});
    g.children_.assign(n, {});
    for (const auto& [parent, child] : edges) {
      auto pi = g.index_.find(parent);
      auto ci = g.index_.find(child);
      if (pi == g.index_.end()) fail(Errc::unknown_endpoint, "edge parent '" + parent + "' is not a declared node");
      if (ci == g.index_.end()) fail(Errc::unknown_endpoint, "edge child '" + child + "' is not a declared node");
      if (pi->second == ci->second) fail(Errc::cycle_detected, "self-loop: " + parent + " -> " + parent);
      auto& ch = g.children_[pi->second];
      if (std::find(ch.begin(), ch.end(), ci->second) != ch.end()) continue;  // set semantics
      ch.push_back(ci->second);
      g.parents_[ci->second].push_back(pi->second);
    }
    g.check_acyclic_and_order();
    for (int v = 0; v < n; ++v) {
      if (g.roles_[v] == NodeRole::predictor && !g.children_[v].empty())
        fail(Errc::bad_argument, "predictor node '" + g.names_[v] + "' must be childless");
    }
    return g;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool has(const std::string& name) const noexcept { return index_.count(name) != 0; }

  int index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail(Errc::unknown_node, "no node named '" + name + "'");
    return it->second;
  }

  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  NodeRole role(int i) const { return roles_.at(static_cast<std::size_t>(i)); }
  NodeRole role(const std::string& n) const { return roles_[static_cast<std::size_t>(index(n))]; }

  const std::vector<int>& parent_ids(int i) const { return parents_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& child_ids(int i) const { return children_.at(static_cast<std::size_t>(i)); }

  std::vector<std::string> parents(const std::string& n) const { return to_names(parent_ids(index(n))); }
  std::vector<std::string> children(const std::string& n) const { return to_names(child_ids(index(n))); }

  bool is_root(int i) const { return parent_ids(i).empty(); }
  bool is_root(const std::string& n) const { return is_root(index(n)); }

  std::vector<std::string> roots() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (parents_[i].empty()) out.push_back(names_[i]);
    return out;
  }

  std::vector<std::string> nodes_with_role(NodeRole r) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (roles_[i] == r) out.push_back(names_[i]);
    return out;
  }

  bool has_protected() const noexcept {
    for (auto r : roles_)
      if (r == NodeRole::protected_attribute) return true;
    return false;
  }

  const std::string& protected_node() const {
    for (std::size_t i = 0; i < roles_.size(); ++i)
      if (roles_[i] == NodeRole::protected_attribute) return names_[i];
    fail(Errc::missing_protected, "graph declares no protected node");
  }

  bool has_edge(const std::string& parent, const std::string& child) const {
    const auto& ch = child_ids(index(parent));
    return std::find(ch.begin(), ch.end(), index(child)) != ch.end();
  }

  std::vector<std::pair<std::string, std::string>> edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t p = 0; p < children_.size(); ++p)
      for (int c : children_[p]) out.emplace_back(names_[p], names_[static_cast<std::size_t>(c)]);
    return out;
  }

  // Declaration-order-stable topological order (indices).
  const std::vector<int>& topological_order() const noexcept { return topo_; }

  // Strict ancestors of v (v excluded), as indices.
  std::vector<int> ancestor_ids(int v) const {
    std::vector<char> seen(names_.size(), 0);
    std::vector<int> stack{v}, out;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int p : parents_[static_cast<std::size_t>(cur)]) {
        if (!seen[static_cast<std::size_t>(p)]) {
          seen[static_cast<std::size_t>(p)] = 1;
          out.push_back(p);
          stack.push_back(p);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool reaches(int from, int to) const {
    if (from == to) return true;
    std::vector<char> seen(names_.size(), 0);
    std::vector<int> stack{from};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int c : children_[static_cast<std::size_t>(cur)]) {
        if (c == to) return true;
        if (!seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = 1;
          stack.push_back(c);
        }
      }
    }
    return false;
  }

  // Graph surgery for do-interventions: drop every edge into each target.
  CausalGraph intervened(const std::set<std::string>& targets) const {
    std::vector<char> is_target(names_.size(), 0);
    for (const auto& t : targets) is_target[static_cast<std::size_t>(index(t))] = 1;
    std::vector<NodeDecl> decls;
    decls.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) decls.push_back({names_[i], roles_[i]});
    std::vector<std::pair<std::string, std::string>> kept;
    for (std::size_t p = 0; p < children_.size(); ++p)
      for (int c : children_[p])
        if (!is_target[static_cast<std::size_t>(c)]) kept.emplace_back(names_[p], names_[static_cast<std::size_t>(c)]);
    return build(decls, kept);
  }

 private:
  CausalGraph() = default;

  std::vector<std::string> to_names(const std::vector<int>& ids) const {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(names_[static_cast<std::size_t>(i)]);
    return out;
  }

  void check_acyclic_and_order() {
    const int n = static_cast<int>(names_.size());
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) indegree[static_cast<std::size_t>(v)] = static_cast<int>(parents_[static_cast<std::size_t>(v)].size());
    // Kahn's algorithm; always take the smallest ready declaration index so
    // the order is deterministic.
    std::set<int> ready;
    for (int v = 0; v < n; ++v)
      if (indegree[static_cast<std::size_t>(v)] == 0) ready.insert(v);
    topo_.clear();
    while (!ready.empty()) {
      int v = *ready.begin();
      ready.erase(ready.begin());
      topo_.push_back(v);
      for (int c : children_[static_cast<std::size_t>(v)])
        if (--indegree[static_cast<std::size_t>(c)] == 0) ready.insert(c);
    }
    if (static_cast<int>(topo_.size()) == n) return;
    fail(Errc::cycle_detected, "cycle: " + find_cycle());
  }

  std::string find_cycle() const {
    const int n = static_cast<int>(names_.size());
    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 white, 1 on stack, 2 done
    std::vector<int> stack;
    std::string found;
    auto dfs = [&](auto&& self, int v) -> bool {
      color[static_cast<std::size_t>(v)] = 1;
      stack.push_back(v);
      for (int c : children_[static_cast<std::size_t>(v)]) {
        if (color[static_cast<std::size_t>(c)] == 1) {
          auto it = std::find(stack.begin(), stack.end(), c);
          for (; it != stack.end(); ++it) found += names_[static_cast<std::size_t>(*it)] + " -> ";
          found += names_[static_cast<std::size_t>(c)];
          return true;
        }
        if (color[static_cast<std::size_t>(c)] == 0 && self(self, c)) return true;
      }
      stack.pop_back();
      color[static_cast<std::size_t>(v)] = 2;
      return false;
    };
    for (int v = 0; v < n; ++v)
      if (color[static_cast<std::size_t>(v)] == 0 && dfs(dfs, v)) break;
    return found;
  }

  std::vector<std::string> names_;
  std::vector<NodeRole> roles_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<int>> children_;
  std::vector<int> topo_;
};

inline CausalGraph build_graph(const std::vector<NodeDecl>& nodes,
                               const std::vector<std::pair<std::string, std::string>>& edges) {
  return CausalGraph::build(nodes, edges);
}

inline CausalGraph intervene(const CausalGraph& g, const std::set<std::string>& targets) {
  return g.intervened(targets);
}

// Every directed path from `from` to `to`, in lexicographic order of the node
// name sequence. Enumeration is exhaustive and worst-case exponential in the
// node count; intended for expert-specified graphs of at most a few dozen
// nodes.
inline std::vector<DirectedPath> directed_paths(const CausalGraph& g, const std::string& from,
                                                const std::string& to) {
  const int src = g.index(from);
  const int dst = g.index(to);
  std::vector<DirectedPath> out;
  if (src == dst) return out;  // paths have k >= 2 distinct nodes

  std::vector<char> on_path(g.size(), 0);
  std::vector<int> path{src};
  on_path[static_cast<std::size_t>(src)] = 1;

  auto sorted_children = [&](int v) {
    std::vector<int> ch = g.child_ids(v);
    std::sort(ch.begin(), ch.end(), [&](int a, int b) { return g.name(a) < g.name(b); });
    return ch;
  };

  auto dfs = [&](auto&& self, int v) -> void {
    for (int c : sorted_children(v)) {
      if (on_path[static_cast<std::size_t>(c)]) continue;
      path.push_back(c);
      if (c == dst) {
        DirectedPath p;
        for (int i : path) p.nodes.push_back(g.name(i));
        out.push_back(std::move(p));
      } else {
        on_path[static_cast<std::size_t>(c)] = 1;
        self(self, c);
        on_path[static_cast<std::size_t>(c)] = 0;
      }
      path.pop_back();
    }
  };
  dfs(dfs, src);
  return out;
}

// True iff some interior node of the path lies in `blockers`. Path endpoints
// must not be blockers.
inline bool is_blocked(const DirectedPath& path, const std::set<std::string>& blockers) {
  if (path.nodes.size() < 2) fail(Errc::bad_argument, "a directed path has at least two nodes");
  if (blockers.count(path.nodes.front()))
    fail(Errc::endpoint_in_blocker_set, "path start '" + path.nodes.front() + "' is in the blocker set");
  if (blockers.count(path.nodes.back()))
    fail(Errc::endpoint_in_blocker_set, "path end '" + path.nodes.back() + "' is in the blocker set");
  for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i)
    if (blockers.count(path.nodes[i])) return true;
  return false;
}

namespace detail {

inline std::set<std::string> role_set(const CausalGraph& g, NodeRole r) {
  auto v = g.nodes_with_role(r);
  return {v.begin(), v.end()};
}

}  // namespace detail

// A non-resolving node v exhibits unresolved discrimination when some directed
// path from the protected node reaches it without passing through a resolving
// variable. Witnesses list every unblocked path.
inline AuditVerdict unresolved_discrimination(const CausalGraph& g, const std::string& v) {
  const std::string& a = g.protected_node();
  (void)g.index(v);
  AuditVerdict verdict;
  if (g.role(v) == NodeRole::resolving) return verdict;
  const auto resolving = detail::role_set(g, NodeRole::resolving);
  for (auto& path : directed_paths(g, a, v)) {
    if (!is_blocked(path, resolving)) verdict.witnesses.push_back(std::move(path));
  }
  verdict.flagged = !verdict.witnesses.empty();
  return verdict;
}

// Dual audit: v (itself not a proxy) exhibits potential proxy discrimination
// when some directed path from the protected node to v passes through a proxy.
inline AuditVerdict potential_proxy_discrimination(const CausalGraph& g, const std::string& v) {
  const std::string& a = g.protected_node();
  (void)g.index(v);
  AuditVerdict verdict;
  if (g.role(v) == NodeRole::proxy) return verdict;
  const auto proxies = detail::role_set(g, NodeRole::proxy);
  for (auto& path : directed_paths(g, a, v)) {
    if (is_blocked(path, proxies)) verdict.witnesses.push_back(std::move(path));
  }
  verdict.flagged = !verdict.witnesses.empty();
  return verdict;
}

// Ancestors of v that are roots of g; a root is its own terminal ancestor.
inline std::set<std::string> terminal_ancestors(const CausalGraph& g, const std::string& v) {
  const int vi = g.index(v);
  std::set<std::string> out;
  if (g.is_root(vi)) {
    out.insert(v);
    return out;
  }
  for (int a : g.ancestor_ids(vi))
    if (g.is_root(a)) out.insert(g.name(a));
  return out;
}

// Unawareness guarantee: a predictor reading only `inputs` is free of proxy
// discrimination when no proxy has a directed path into any input.
inline bool unawareness_safe(const CausalGraph& g, const std::set<std::string>& inputs) {
  for (const auto& in : inputs)
    if (g.role(in) == NodeRole::proxy) fail(Errc::proxy_in_input_set, "input '" + in + "' is a proxy");
  for (const auto& p : g.nodes_with_role(NodeRole::proxy)) {
    for (const auto& in : inputs)
      if (g.reaches(g.index(p), g.index(in))) return false;
  }
  return true;
}

// Graph condition under which E[x | do(p)] equals E[x | p]: every directed
// path from every ancestor of p into x must run through p.
inline bool adjustment_identifiable(const CausalGraph& g, const std::string& p, const std::string& x) {
  if (g.role(p) != NodeRole::proxy) fail(Errc::role_mismatch, "'" + p + "' is not labeled proxy");
  if (g.role(x) != NodeRole::feature) fail(Errc::role_mismatch, "'" + x + "' is not labeled feature");
  const std::set<std::string> blocker{p};
  for (int anc : g.ancestor_ids(g.index(p))) {
    for (const auto& path : directed_paths(g, g.name(anc), x))
      if (!is_blocked(path, blocker)) return false;
  }
  return true;
}

}  // namespace causalfair
