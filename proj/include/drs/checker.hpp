#pragma once

// Well-formedness checking of clausal forms.
//
// A form is accepted iff it describes an interpretable DRS: variables have a
// consistent sort, every discourse referent used in a condition is introduced
// by a REF clause in an accessible box, box arguments point at existing boxes
// (relation arguments at constituents of the same segmented DRS), the
// accessibility relation is acyclic, and there is exactly one main box.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drs/clause.hpp"
#include "drs/errors.hpp"
#include "drs/io.hpp"

namespace drs {

enum class VarType : std::uint8_t { Box, Entity };

inline constexpr std::string_view type_name(VarType type) { return type == VarType::Box ? "box" : "entity"; }

/// Field 0 is the box label, field k is args[k-1].
struct VarPosition {
  std::size_t clause = 0;
  std::size_t field = 0;
  friend bool operator==(const VarPosition&, const VarPosition&) = default;
};

struct TypeEntry {
  VarType type = VarType::Entity;
  VarPosition witness;
};

struct TypingTable {
  std::map<std::string, TypeEntry, std::less<>> entries;

  std::optional<VarType> type_of(std::string_view name) const {
    auto it = entries.find(name);
    if (it == entries.end()) return std::nullopt;
    return it->second.type;
  }
  bool is_box(std::string_view name) const { return type_of(name) == VarType::Box; }
  bool is_entity(std::string_view name) const { return type_of(name) == VarType::Entity; }

  std::vector<std::string> variables(VarType type) const {
    std::vector<std::string> out;
    for (const auto& [name, entry] : entries)
      if (entry.type == type) out.push_back(name);
    return out;
  }
};

class TypeClash : public InputError {
 public:
  TypeClash(std::string variable, VarPosition first, VarPosition second)
      : InputError("TypeClash: '" + variable + "' used as both box and entity (clause " +
                   std::to_string(first.clause + 1) + " field " + std::to_string(first.field) + ", clause " +
                   std::to_string(second.clause + 1) + " field " + std::to_string(second.field) + ")"),
        variable_(std::move(variable)), first_(first), second_(second) {}
  const std::string& variable() const { return variable_; }
  VarPosition first() const { return first_; }
  VarPosition second() const { return second_; }

 private:
  std::string variable_;
  VarPosition first_;
  VarPosition second_;
};

/// Sort that an argument position imposes on a variable.
inline constexpr VarType argument_type(ClauseKind kind, std::size_t arg) {
  switch (kind) {
    case ClauseKind::UnaryBoxOp:
    case ClauseKind::BinaryBoxOp:
    case ClauseKind::SdrsConstituent:
    case ClauseKind::DiscourseRelation:
      return VarType::Box;
    case ClauseKind::Prp:
      return arg == 0 ? VarType::Entity : VarType::Box;
    default:
      return VarType::Entity;
  }
}

inline TypingTable induce_types(const ClausalForm& form) {
  TypingTable table;
  auto assign = [&](const std::string& name, VarType type, VarPosition at) {
    auto [it, inserted] = table.entries.try_emplace(name, TypeEntry{type, at});
    if (!inserted && it->second.type != type) throw TypeClash(name, it->second.witness, at);
  };
  for (std::size_t i = 0; i < form.clauses.size(); ++i) {
    const Clause& clause = form.clauses[i];
    assign(clause.box, VarType::Box, {i, 0});
    for (std::size_t k = 0; k < clause.args.size(); ++k) {
      if (clause.args[k].is_var()) assign(clause.args[k].text, argument_type(clause.kind, k), {i, k + 1});
    }
  }
  return table;
}

enum class EdgeKind : std::uint8_t { Subordination, Constituent, Induced };

/// `from` is accessible from `to` (from outscopes to).
struct Edge {
  std::string from;
  std::string to;
  EdgeKind kind = EdgeKind::Subordination;
  /// Operator token for explicit edges, the bound referent for induced ones.
  std::string label;

  bool is_explicit() const { return kind != EdgeKind::Induced; }
};

class AccessibilityGraph {
 public:
  std::set<std::string, std::less<>> boxes;
  std::vector<Edge> edges;

  void add(Edge edge) { edges.push_back(std::move(edge)); }

  std::vector<const Edge*> explicit_edges() const { return select(true); }
  std::vector<const Edge*> induced_edges() const { return select(false); }

  bool has_edge(std::string_view from, std::string_view to, std::optional<EdgeKind> kind = std::nullopt) const {
    return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
      return e.from == from && e.to == to && (!kind || e.kind == *kind);
    });
  }

  /// Boxes reachable from `from` by one or more edges.
  std::set<std::string> reachable_from(std::string_view from, bool explicit_only = false) const {
    std::set<std::string> seen;
    std::deque<std::string> todo{std::string(from)};
    while (!todo.empty()) {
      const std::string node = std::move(todo.front());
      todo.pop_front();
      for (const Edge& e : edges) {
        if (e.from != node || (explicit_only && !e.is_explicit())) continue;
        if (seen.insert(e.to).second) todo.push_back(e.to);
      }
    }
    return seen;
  }

  bool reaches(std::string_view from, std::string_view to, bool explicit_only = false) const {
    return reachable_from(from, explicit_only).contains(std::string(to));
  }

  /// Shortest path from -> ... -> to (both included), empty if none.
  std::vector<std::string> path(std::string_view from, std::string_view to, bool explicit_only = false) const {
    std::map<std::string, std::string> parent;
    std::deque<std::string> todo{std::string(from)};
    while (!todo.empty()) {
      const std::string node = todo.front();
      todo.pop_front();
      for (const Edge& e : edges) {
        if (e.from != node || (explicit_only && !e.is_explicit()) || parent.contains(e.to)) continue;
        parent.emplace(e.to, node);
        if (e.to == to) {
          std::vector<std::string> out{e.to};
          for (std::string at = node;; at = parent.at(at)) {
            out.push_back(at);
            if (at == from) break;
          }
          std::reverse(out.begin(), out.end());
          return out;
        }
        todo.push_back(e.to);
      }
    }
    return {};
  }

  /// Some cycle as a node list (first node repeated at the end), or empty.
  std::vector<std::string> find_cycle(bool explicit_only = false) const {
    for (const std::string& box : boxes) {
      if (reaches(box, box, explicit_only)) {
        std::vector<std::string> cycle = path(box, box, explicit_only);
        if (!cycle.empty()) return cycle;
      }
    }
    return {};
  }

  /// Boxes without an incoming explicit edge.
  std::vector<std::string> roots() const {
    std::vector<std::string> out;
    for (const std::string& box : boxes) {
      const bool subordinate = std::any_of(edges.begin(), edges.end(),
                                           [&](const Edge& e) { return e.is_explicit() && e.to == box; });
      if (!subordinate) out.push_back(box);
    }
    return out;
  }

 private:
  std::vector<const Edge*> select(bool explicit_edges) const {
    std::vector<const Edge*> out;
    for (const Edge& e : edges)
      if (e.is_explicit() == explicit_edges) out.push_back(&e);
    return out;
  }
};

/// Edges that follow from the operator structure alone.
inline AccessibilityGraph explicit_structure(const ClausalForm& form, const TypingTable& typing) {
  AccessibilityGraph graph;
  for (const auto& [name, entry] : typing.entries)
    if (entry.type == VarType::Box) graph.boxes.insert(name);
  for (const Clause& c : form.clauses) {
    switch (c.kind) {
      case ClauseKind::UnaryBoxOp:
        graph.add({c.box, c.args[0].text, EdgeKind::Subordination, c.op});
        break;
      case ClauseKind::BinaryBoxOp:
        graph.add({c.box, c.args[0].text, EdgeKind::Subordination, c.op});
        if (c.op == "IMP") graph.add({c.args[0].text, c.args[1].text, EdgeKind::Subordination, c.op});
        else graph.add({c.box, c.args[1].text, EdgeKind::Subordination, c.op});
        break;
      case ClauseKind::Prp:
        graph.add({c.box, c.args[1].text, EdgeKind::Subordination, c.op});
        break;
      case ClauseKind::SdrsConstituent:
        graph.add({c.box, c.args[0].text, EdgeKind::Constituent, c.op});
        break;
      default:
        break;
    }
  }
  return graph;
}

/// An entity occurrence in a condition of `box`, and the box whose REF binds it.
struct Binding {
  std::string referent;
  std::string box;
  std::optional<std::string> binder;
};

namespace detail {

/// Explicit-topological order of boxes (outscoping boxes first, ties by name);
/// boxes on explicit cycles follow in name order.
inline std::vector<std::string> scope_order(const AccessibilityGraph& graph) {
  std::map<std::string, int> indegree;
  for (const auto& box : graph.boxes) indegree[box] = 0;
  for (const Edge* e : graph.explicit_edges()) ++indegree[e->to];
  std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
  for (const auto& [box, degree] : indegree)
    if (degree == 0) ready.push(box);
  std::vector<std::string> order;
  std::set<std::string> placed;
  while (!ready.empty()) {
    std::string box = ready.top();
    ready.pop();
    order.push_back(box);
    placed.insert(box);
    for (const Edge* e : graph.explicit_edges())
      if (e->from == box && --indegree[e->to] == 0) ready.push(e->to);
  }
  for (const auto& box : graph.boxes)
    if (!placed.contains(box)) order.push_back(box);
  return order;
}

}  // namespace detail

/// Resolves every entity occurrence to a binder and adds induced edges p -> b
/// where a referent introduced in p is used in b without an existing path.
inline std::vector<Binding> bind_referents(const ClausalForm& form, const TypingTable& typing,
                                           AccessibilityGraph& graph) {
  std::map<std::string, std::set<std::string>> introductions;
  for (const Clause& c : form.clauses)
    if (c.kind == ClauseKind::Ref) introductions[c.args[0].text].insert(c.box);

  std::map<std::string, std::set<std::string>> uses;  // box -> referents
  for (const Clause& c : form.clauses) {
    if (c.kind == ClauseKind::Ref) continue;
    for (const Term& arg : c.args)
      if (arg.is_var() && typing.is_entity(arg.text)) uses[c.box].insert(arg.text);
  }

  std::vector<Binding> bindings;
  for (const std::string& box : detail::scope_order(graph)) {
    auto it = uses.find(box);
    if (it == uses.end()) continue;
    for (const std::string& referent : it->second) {
      Binding binding{referent, box, std::nullopt};
      auto intro = introductions.find(referent);
      if (intro != introductions.end()) {
        for (const std::string& p : intro->second) {
          if (p == box || graph.reaches(p, box)) {
            binding.binder = p;
            break;
          }
        }
        if (!binding.binder) {
          binding.binder = *intro->second.begin();
          graph.add({*binding.binder, box, EdgeKind::Induced, referent});
        }
      }
      bindings.push_back(std::move(binding));
    }
  }
  return bindings;
}

inline AccessibilityGraph build_accessibility(const ClausalForm& form, const TypingTable& typing) {
  AccessibilityGraph graph = explicit_structure(form, typing);
  bind_referents(form, typing, graph);
  return graph;
}

enum class Reason : std::uint8_t {
  TypeClash,
  FreeEntityVariable,
  UnintroducedDiscourseReferent,
  DanglingBoxReference,
  RelationOutsideSegmentedDrs,
  AccessibilityCycle,
  NoUniqueMainBox,
  SyntaxError,
};

inline constexpr std::string_view reason_name(Reason reason) {
  switch (reason) {
    case Reason::TypeClash: return "TypeClash";
    case Reason::FreeEntityVariable: return "FreeEntityVariable";
    case Reason::UnintroducedDiscourseReferent: return "UnintroducedDiscourseReferent";
    case Reason::DanglingBoxReference: return "DanglingBoxReference";
    case Reason::RelationOutsideSegmentedDrs: return "RelationOutsideSegmentedDrs";
    case Reason::AccessibilityCycle: return "AccessibilityCycle";
    case Reason::NoUniqueMainBox: return "NoUniqueMainBox";
    case Reason::SyntaxError: return "SyntaxError";
  }
  return "?";
}

struct CheckReport {
  std::optional<Reason> reason;
  /// Variables, boxes or clause texts that exhibit the violation.
  std::vector<std::string> witnesses;
  std::string message;
  TypingTable typing;
  AccessibilityGraph graph;
  std::vector<Binding> bindings;
  std::optional<std::string> main_box;
  std::vector<std::string> warnings;

  bool valid() const { return !reason.has_value(); }

  /// Presuppositional boxes: roots of the explicit structure other than the main box.
  std::vector<std::string> presupposition_boxes() const {
    std::vector<std::string> out;
    for (auto& root : graph.roots())
      if (root != main_box) out.push_back(root);
    return out;
  }
};

namespace detail {

inline CheckReport reject(CheckReport report, Reason reason, std::vector<std::string> witnesses, std::string message) {
  report.reason = reason;
  report.witnesses = std::move(witnesses);
  report.message = std::move(message);
  report.main_box.reset();
  return report;
}

inline std::string join(const std::vector<std::string>& items, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace detail

inline CheckReport check(const ClausalForm& form) {
  CheckReport report;
  for (std::size_t i = 0; i < form.clauses.size(); ++i) {
    if (auto problem = shape_error(form.clauses[i])) {
      return detail::reject(std::move(report), Reason::SyntaxError, {format_clause(form.clauses[i])},
                            "clause " + std::to_string(i + 1) + ": " + *problem);
    }
  }

  // (1) sorts
  try {
    report.typing = induce_types(form);
  } catch (const TypeClash& clash) {
    return detail::reject(std::move(report), Reason::TypeClash, {clash.variable()}, clash.what());
  }

  // (2) every referent in a condition has a REF binder
  report.graph = explicit_structure(form, report.typing);
  report.bindings = bind_referents(form, report.typing, report.graph);
  std::set<std::string> unintroduced;
  for (const Binding& b : report.bindings)
    if (!b.binder) unintroduced.insert(b.referent);
  if (!unintroduced.empty()) {
    std::vector<std::string> w(unintroduced.begin(), unintroduced.end());
    return detail::reject(std::move(report), Reason::UnintroducedDiscourseReferent, w,
                          "referent(s) without a REF clause: " + detail::join(w));
  }

  // (3) box arguments exist; relation arguments are constituents of the host
  std::set<std::string> labelled;
  std::map<std::string, std::set<std::string>> constituents;
  for (const Clause& c : form.clauses) {
    labelled.insert(c.box);
    if (c.kind == ClauseKind::SdrsConstituent) constituents[c.box].insert(c.args[0].text);
  }
  std::set<std::string> dangling;
  for (const Clause& c : form.clauses) {
    for (std::size_t k = 0; k < c.args.size(); ++k) {
      if (c.args[k].is_var() && argument_type(c.kind, k) == VarType::Box && !labelled.contains(c.args[k].text))
        dangling.insert(c.args[k].text);
    }
  }
  if (!dangling.empty()) {
    std::vector<std::string> w(dangling.begin(), dangling.end());
    return detail::reject(std::move(report), Reason::DanglingBoxReference, w,
                          "box(es) referenced but never labelling a clause: " + detail::join(w));
  }
  for (const Clause& c : form.clauses) {
    if (c.kind != ClauseKind::DiscourseRelation) continue;
    const auto& members = constituents[c.box];
    for (const Term& arg : c.args) {
      if (!members.contains(arg.text)) {
        return detail::reject(std::move(report), Reason::RelationOutsideSegmentedDrs, {arg.text, c.box},
                              "'" + format_clause(c) + "': " + arg.text + " is not a constituent of " + c.box);
      }
    }
  }

  // (4) acyclicity of the accessibility closure
  if (auto cycle = report.graph.find_cycle(true); !cycle.empty()) {
    return detail::reject(std::move(report), Reason::AccessibilityCycle, cycle,
                          "cycle in box structure: " + detail::join(cycle, " -> "));
  }
  for (const Edge* e : report.graph.induced_edges()) {
    if (report.graph.reaches(e->to, e->from, true)) {
      return detail::reject(std::move(report), Reason::FreeEntityVariable, {e->label, e->from, e->to},
                            "'" + e->label + "' is introduced in " + e->from + ", which is subordinate to " + e->to +
                                " where it is used");
    }
  }
  if (auto cycle = report.graph.find_cycle(false); !cycle.empty()) {
    return detail::reject(std::move(report), Reason::AccessibilityCycle, cycle,
                          "cycle through induced accessibility: " + detail::join(cycle, " -> "));
  }

  // (5) unique main box
  const std::vector<std::string> roots = report.graph.roots();
  std::set<std::string> non_roots;
  for (const auto& box : report.graph.boxes)
    if (std::find(roots.begin(), roots.end(), box) == roots.end()) non_roots.insert(box);
  std::vector<std::string> candidates;
  for (const std::string& root : roots) {
    const auto below = report.graph.reachable_from(root, true);
    const bool dominates = std::all_of(non_roots.begin(), non_roots.end(), [&](auto& b) { return below.contains(b); });
    const auto accessible = report.graph.reachable_from(root, false);
    const bool anchors_other_root =
        std::any_of(roots.begin(), roots.end(), [&](auto& r) { return r != root && accessible.contains(r); });
    if (dominates && !anchors_other_root) candidates.push_back(root);
  }
  if (candidates.size() != 1) {
    return detail::reject(std::move(report), Reason::NoUniqueMainBox, candidates.empty() ? roots : candidates,
                          candidates.empty() ? "no box qualifies as main box"
                                             : "several main box candidates: " + detail::join(candidates));
  }
  report.main_box = candidates.front();

  std::set<std::string> used;
  for (const Binding& b : report.bindings) used.insert(b.referent);
  for (const Clause& c : form.clauses) {
    if (c.kind == ClauseKind::Ref && !used.contains(c.args[0].text))
      report.warnings.push_back("referent " + c.args[0].text + " is introduced but never used");
  }
  return report;
}

/// Parses a block of clause lines and checks it; parse failures give SyntaxError.
inline CheckReport check_text(std::string_view text, const OperatorTables& tables = default_tables()) {
  ClausalForm form;
  const auto blocks = read_blocks(text);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const SourceLine& line : blocks[b].lines) {
      try {
        form.clauses.push_back(parse_clause(line.text, tables));
      } catch (const MalformedClause& e) {
        CheckReport report;
        report.reason = Reason::SyntaxError;
        report.witnesses = {line.text};
        report.message = e.located(b, line.number).what();
        return report;
      }
    }
  }
  return check(form);
}

}  // namespace drs
