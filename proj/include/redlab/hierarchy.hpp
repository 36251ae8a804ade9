#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "redlab/errors.hpp"

namespace redlab {

struct RelationNode {
  std::string id;
  bool canonical = true;
};

struct ReducibilityEdge {
  std::string from;
  std::string to;
  bool strict = true;
  std::string source;  // citation tag
};

/// Registry of equivalence relations and the known reducibility edges.
/// Stores only positively recorded facts; incomparability is the absence of
/// edges. No cycle may pass through a strict edge, so the quotient by
/// bireducibility stays a partial order.
class RelationGraph {
public:
  void add_node(const std::string& id, bool canonical) {
    require(!id.empty(), errc::invalid_input, "empty node id");
    require(!nodes_.count(id), errc::invalid_input, "duplicate node '" + id + "'");
    nodes_.emplace(id, RelationNode{id, canonical});
  }

  bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }

  void add_edge(const std::string& from, const std::string& to, bool strict,
                const std::string& source) {
    check_node(from);
    check_node(to);
    require(from != to, errc::invalid_input, "self-loops are implicit");
    if (strict)
      require(!reaches(to, from), errc::invalid_input,
              "edge " + from + " -> " + to + " would close a strict cycle");
    else
      require(!reaches_using_strict(to, from), errc::invalid_input,
              "edge " + from + " -> " + to + " would put a strict edge on a cycle");
    edges_.push_back(ReducibilityEdge{from, to, strict, source});
  }

  bool reachable(const std::string& from, const std::string& to) const {
    check_node(from);
    check_node(to);
    if (from == to) return true;
    return reaches(from, to);
  }

  std::vector<RelationNode> nodes() const {
    std::vector<RelationNode> out;
    for (const auto& [id, n] : nodes_) out.push_back(n);
    return out;
  }

  const std::vector<ReducibilityEdge>& edges() const { return edges_; }

  bool strict_part_acyclic() const {
    // Kahn over strict edges only.
    std::map<std::string, int> indeg;
    for (const auto& [id, n] : nodes_) indeg[id] = 0;
    for (const auto& e : edges_)
      if (e.strict) ++indeg[e.to];
    std::deque<std::string> ready;
    for (const auto& [id, d] : indeg)
      if (d == 0) ready.push_back(id);
    std::size_t seen = 0;
    while (!ready.empty()) {
      const std::string cur = ready.front();
      ready.pop_front();
      ++seen;
      for (const auto& e : edges_)
        if (e.strict && e.from == cur && --indeg[e.to] == 0) ready.push_back(e.to);
    }
    return seen == nodes_.size();
  }

  /// Deterministic DOT: nodes alphabetical, strict edges solid, bireducible
  /// pairs as one double-ended edge.
  std::string export_dot() const {
    std::ostringstream os;
    os << "digraph reducibility {\n";
    os << "  rankdir=BT;\n";
    for (const auto& [id, n] : nodes_)
      os << "  \"" << id << "\"" << (n.canonical ? "" : " [shape=box]") << ";\n";
    std::set<std::pair<std::string, std::string>> pair_edges;  // both directions non-strict
    for (const auto& e : edges_)
      if (!e.strict && has_reverse_nonstrict(e))
        pair_edges.insert(std::minmax(e.from, e.to));
    std::vector<std::string> lines;
    for (const auto& [a, b] : pair_edges)
      lines.push_back("  \"" + a + "\" -> \"" + b + "\" [dir=both];\n");
    for (const auto& e : edges_) {
      if (!e.strict && pair_edges.count(std::minmax(e.from, e.to))) continue;
      lines.push_back("  \"" + e.from + "\" -> \"" + e.to + "\" [style=solid];\n");
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) os << l;
    os << "}\n";
    return os.str();
  }

  /// The milestone relations and the reducibility chains among them, with
  /// the equality hierarchy truncated at four classes.
  static RelationGraph seeded() {
    RelationGraph g;
    for (const char* id : {"=1", "=2", "=3", "=4", "=ω", "=2^ω", "E0", "E1", "EF2", "=+",
                           "ESinf", "EG0", "EKsigma", "ESigma11"})
      g.add_node(id, true);
    g.add_node("H0", false);
    // chain (1)
    g.add_edge("=1", "=2", true, "(1)");
    g.add_edge("=2", "=3", true, "(1)");
    g.add_edge("=3", "=4", true, "(1)");
    g.add_edge("=4", "=ω", true, "(1)");
    g.add_edge("=ω", "=2^ω", true, "(1)");
    // chain (2)
    g.add_edge("=2^ω", "E0", true, "(2)");
    // chain (3)
    g.add_edge("E0", "EF2", true, "(3)");
    g.add_edge("EF2", "ESinf", true, "(3)");
    g.add_edge("ESinf", "EG0", true, "(3)");
    // chain (4)
    g.add_edge("E1", "EKsigma", true, "(4)");
    // chain (5)
    g.add_edge("EF2", "=+", true, "(5)");
    g.add_edge("=+", "ESinf", true, "(5)");
    // H0 is bireducible with EKsigma
    g.add_edge("H0", "EKsigma", false, "H0~EKsigma");
    g.add_edge("EKsigma", "H0", false, "H0~EKsigma");
    // the maximum analytic equivalence relation
    g.add_edge("EG0", "ESigma11", true, "max");
    g.add_edge("EKsigma", "ESigma11", true, "max");
    return g;
  }

private:
  void check_node(const std::string& id) const {
    require(nodes_.count(id) > 0, errc::unknown_node, "no node '" + id + "'");
  }

  bool has_reverse_nonstrict(const ReducibilityEdge& e) const {
    for (const auto& r : edges_)
      if (!r.strict && r.from == e.to && r.to == e.from) return true;
    return false;
  }

  bool reaches(const std::string& from, const std::string& to) const {
    std::set<std::string> seen{from};
    std::deque<std::string> queue{from};
    while (!queue.empty()) {
      const std::string cur = queue.front();
      queue.pop_front();
      for (const auto& e : edges_) {
        if (e.from != cur) continue;
        if (e.to == to) return true;
        if (seen.insert(e.to).second) queue.push_back(e.to);
      }
    }
    return false;
  }

  /// Is there a path from -> to that crosses at least one strict edge?
  /// States are (node, strict edge seen yet).
  bool reaches_using_strict(const std::string& from, const std::string& to) const {
    std::set<std::pair<std::string, bool>> seen{{from, false}};
    std::deque<std::pair<std::string, bool>> queue{{from, false}};
    while (!queue.empty()) {
      const auto [cur, used] = queue.front();
      queue.pop_front();
      for (const auto& e : edges_) {
        if (e.from != cur) continue;
        const bool next_used = used || e.strict;
        if (e.to == to && next_used) return true;
        if (seen.insert({e.to, next_used}).second) queue.emplace_back(e.to, next_used);
      }
    }
    return false;
  }

  std::map<std::string, RelationNode> nodes_;
  std::vector<ReducibilityEdge> edges_;
};

}  // namespace redlab
