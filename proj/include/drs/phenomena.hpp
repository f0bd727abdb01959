#pragma once

// Counting semantic phenomena in clausal forms, and an automated judge of
// whether a system DRS captures a phenomenon present in the gold DRS.

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "drs/checker.hpp"
#include "drs/errors.hpp"
#include "drs/matcher.hpp"

namespace drs {

enum class PhenomenonKind : std::uint8_t {
  NegationModals,
  ScopeAmbiguity,
  PronounResolution,
  DiscourseRelImp,
  EmbeddedClauses,
};

inline constexpr std::array<PhenomenonKind, 5> kAllPhenomena{
    PhenomenonKind::NegationModals, PhenomenonKind::ScopeAmbiguity, PhenomenonKind::PronounResolution,
    PhenomenonKind::DiscourseRelImp, PhenomenonKind::EmbeddedClauses};

inline constexpr std::string_view phenomenon_name(PhenomenonKind kind) {
  switch (kind) {
    case PhenomenonKind::NegationModals: return "negation_modals";
    case PhenomenonKind::ScopeAmbiguity: return "scope_ambiguity";
    case PhenomenonKind::PronounResolution: return "pronoun_resolution";
    case PhenomenonKind::DiscourseRelImp: return "discourse_rel_imp";
    case PhenomenonKind::EmbeddedClauses: return "embedded_clauses";
  }
  return "?";
}

/// Counts that come from heuristics rather than an exact definition.
inline constexpr bool is_approximate(PhenomenonKind kind) {
  return kind == PhenomenonKind::ScopeAmbiguity || kind == PhenomenonKind::PronounResolution ||
         kind == PhenomenonKind::EmbeddedClauses;
}

struct PhenomenonConfig {
  std::set<std::string, std::less<>> anaphoric_concepts{"male.n.02", "female.n.02", "person.n.01", "thing.n.12"};
};

using PhenomenonCounts = std::map<PhenomenonKind, std::size_t>;

namespace detail {

inline bool is_scopal(const Clause& c) {
  return c.kind == ClauseKind::UnaryBoxOp || (c.kind == ClauseKind::BinaryBoxOp && c.op == "IMP");
}

inline std::vector<std::string> scope_boxes(const Clause& c) {
  std::vector<std::string> out;
  for (const Term& t : c.args) out.push_back(t.text);
  return out;
}

/// Ordered pairs (outer, inner) of scopal clause indices where the inner
/// clause sits in, or below, one of the outer clause's scope boxes.
inline std::vector<std::pair<std::size_t, std::size_t>> nested_scopal_pairs(const ClausalForm& form,
                                                                            const AccessibilityGraph& graph) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < form.clauses.size(); ++a) {
    if (!is_scopal(form.clauses[a])) continue;
    for (std::size_t b = 0; b < form.clauses.size(); ++b) {
      if (a == b || !is_scopal(form.clauses[b])) continue;
      const std::string& host = form.clauses[b].box;
      for (const std::string& scope : scope_boxes(form.clauses[a])) {
        if (scope == host || graph.reaches(scope, host, true)) {
          out.emplace_back(a, b);
          break;
        }
      }
    }
  }
  return out;
}

inline std::vector<std::string> pronoun_entities(const ClausalForm& form, const CheckReport& report,
                                                 const PhenomenonConfig& config) {
  std::vector<std::string> out;
  const std::vector<std::string> presup = report.presupposition_boxes();
  for (const Clause& ref : form.clauses) {
    if (ref.kind != ClauseKind::Ref) continue;
    if (std::find(presup.begin(), presup.end(), ref.box) == presup.end()) continue;
    const std::string& e = ref.args[0].text;
    if (std::find(out.begin(), out.end(), e) != out.end()) continue;
    const bool anaphoric = std::any_of(form.clauses.begin(), form.clauses.end(), [&](const Clause& c) {
      return c.kind == ClauseKind::Concept && c.args[0].text == e && config.anaphoric_concepts.contains(c.op + "." + c.sense);
    });
    if (!anaphoric) continue;
    // Boxes other than the introducing one where the entity fills a role.
    std::set<std::string> boxes;
    for (const Clause& c : form.clauses) {
      if (c.kind != ClauseKind::Role || c.box == ref.box) continue;
      for (const Term& t : c.args)
        if (t.is_var() && t.text == e) boxes.insert(c.box);
    }
    if (boxes.size() >= 2) out.push_back(e);
  }
  return out;
}

inline bool has_verb_concept(const ClausalForm& form, std::string_view box) {
  return std::any_of(form.clauses.begin(), form.clauses.end(),
                     [&](const Clause& c) { return c.kind == ClauseKind::Concept && c.box == box && c.pos() == 'v'; });
}

inline CheckReport require_valid(const ClausalForm& form, std::string_view what) {
  CheckReport report = check(form);
  if (!report.valid()) {
    throw RequiresValidForm(std::string(what) + " needs a valid form: " + std::string(reason_name(*report.reason)));
  }
  return report;
}

}  // namespace detail

inline PhenomenonCounts detect_phenomena(const ClausalForm& form, const PhenomenonConfig& config = {}) {
  const CheckReport report = detail::require_valid(form, "phenomenon detection");
  PhenomenonCounts counts;
  for (PhenomenonKind k : kAllPhenomena) counts[k] = 0;
  for (const Clause& c : form.clauses) {
    if (c.kind == ClauseKind::UnaryBoxOp) ++counts[PhenomenonKind::NegationModals];
    if (c.kind == ClauseKind::DiscourseRelation || (c.kind == ClauseKind::BinaryBoxOp && c.op == "IMP"))
      ++counts[PhenomenonKind::DiscourseRelImp];
    if (c.kind == ClauseKind::Prp && detail::has_verb_concept(form, c.args[1].text))
      ++counts[PhenomenonKind::EmbeddedClauses];
  }
  counts[PhenomenonKind::ScopeAmbiguity] = detail::nested_scopal_pairs(form, report.graph).size();
  counts[PhenomenonKind::PronounResolution] = detail::pronoun_entities(form, report, config).size();
  return counts;
}

/// Concept standing for a box's content: first verb, else first adjective,
/// else first concept.
inline const Clause* main_concept(const ClausalForm& form, std::string_view box) {
  const Clause* first = nullptr;
  const Clause* adjective = nullptr;
  for (const Clause& c : form.clauses) {
    if (c.kind != ClauseKind::Concept || c.box != box) continue;
    if (c.pos() == 'v') return &c;
    if (adjective == nullptr && c.pos() == 'a') adjective = &c;
    if (first == nullptr) first = &c;
  }
  return adjective != nullptr ? adjective : first;
}

/// Whether `sys` captures every occurrence of `kind` in `gold` under the
/// mapping found by scoring.
inline bool judge_phenomenon(const ClausalForm& sys, const ClausalForm& gold, PhenomenonKind kind,
                             const VarMapping& mapping, const PhenomenonConfig& config = {}) {
  const CheckReport report = detail::require_valid(gold, "phenomenon judgement");
  if (detect_phenomena(gold, config).at(kind) == 0) {
    throw PhenomenonAbsentInGold("PhenomenonAbsentInGold: " + std::string(phenomenon_name(kind)));
  }
  auto matched = [&](const Clause& g) {
    return std::any_of(sys.clauses.begin(), sys.clauses.end(), [&](const Clause& s) { return clause_match(s, g, mapping); });
  };
  auto scope_content_matched = [&](const std::string& box) {
    const Clause* c = main_concept(gold, box);
    return c == nullptr || matched(*c);
  };

  switch (kind) {
    case PhenomenonKind::NegationModals:
      for (const Clause& g : gold.clauses) {
        if (g.kind != ClauseKind::UnaryBoxOp) continue;
        if (!matched(g) || !scope_content_matched(g.args[0].text)) return false;
      }
      return true;

    case PhenomenonKind::DiscourseRelImp:
      for (const Clause& g : gold.clauses) {
        if (g.kind != ClauseKind::DiscourseRelation && !(g.kind == ClauseKind::BinaryBoxOp && g.op == "IMP")) continue;
        if (!matched(g)) return false;
        for (const Term& t : g.args)
          if (!scope_content_matched(t.text)) return false;
      }
      return true;

    case PhenomenonKind::EmbeddedClauses:
      for (const Clause& g : gold.clauses) {
        if (g.kind != ClauseKind::Prp || !detail::has_verb_concept(gold, g.args[1].text)) continue;
        const std::string& inner = g.args[1].text;
        if (!matched(g) || !scope_content_matched(inner)) return false;
        // Entities shared between roles inside and outside the embedded box.
        std::set<std::string> inside, outside;
        for (const Clause& c : gold.clauses) {
          if (c.kind != ClauseKind::Role) continue;
          for (const Term& t : c.args)
            if (t.is_var()) (c.box == inner ? inside : outside).insert(t.text);
        }
        for (const Clause& c : gold.clauses) {
          if (c.kind != ClauseKind::Role || c.box != inner) continue;
          const bool shared = std::any_of(c.args.begin(), c.args.end(), [&](const Term& t) {
            return t.is_var() && outside.contains(t.text) && inside.contains(t.text);
          });
          if (shared && !matched(c)) return false;
        }
      }
      return true;

    case PhenomenonKind::PronounResolution:
      for (const std::string& e : detail::pronoun_entities(gold, report, config)) {
        for (const Clause& c : gold.clauses) {
          if (c.kind != ClauseKind::Role) continue;
          const bool uses = std::any_of(c.args.begin(), c.args.end(), [&](const Term& t) { return t.is_var() && t.text == e; });
          if (uses && !matched(c)) return false;
        }
      }
      return true;

    case PhenomenonKind::ScopeAmbiguity: {
      AccessibilityGraph sys_graph;
      try {
        sys_graph = explicit_structure(sys, induce_types(sys));
      } catch (const InputError&) {
        return false;
      }
      for (auto [a, b] : detail::nested_scopal_pairs(gold, report.graph)) {
        const Clause& outer = gold.clauses[a];
        const Clause& inner = gold.clauses[b];
        const Clause* so = nullptr;
        const Clause* si = nullptr;
        for (const Clause& s : sys.clauses) {
          if (so == nullptr && clause_match(s, outer, mapping)) so = &s;
          if (si == nullptr && clause_match(s, inner, mapping)) si = &s;
        }
        if (so == nullptr || si == nullptr) return false;
        const bool nested = std::any_of(so->args.begin(), so->args.end(), [&](const Term& t) {
          return t.text == si->box || sys_graph.reaches(t.text, si->box, true);
        });
        if (!nested) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace drs
