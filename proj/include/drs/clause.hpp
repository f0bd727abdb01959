#pragma once

// Data model for DRSs in clausal form.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drs/errors.hpp"

namespace drs {

struct Term {
  enum class Kind : std::uint8_t { Variable, Constant };

  Kind kind = Kind::Variable;
  /// Variable name, or constant text without the surrounding quotes.
  std::string text;

  static Term var(std::string name) { return {Kind::Variable, std::move(name)}; }
  static Term constant(std::string value) { return {Kind::Constant, std::move(value)}; }

  bool is_var() const { return kind == Kind::Variable; }
  bool is_const() const { return kind == Kind::Constant; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class ClauseKind : std::uint8_t {
  Ref,
  UnaryBoxOp,
  BinaryBoxOp,
  Prp,
  SdrsConstituent,
  DiscourseRelation,
  Concept,
  Role,
  Comparison,
};

inline constexpr std::size_t arity(ClauseKind kind) {
  switch (kind) {
    case ClauseKind::Ref:
    case ClauseKind::UnaryBoxOp:
    case ClauseKind::SdrsConstituent:
    case ClauseKind::Concept:
      return 1;
    default:
      return 2;
  }
}

inline constexpr std::string_view kind_name(ClauseKind kind) {
  switch (kind) {
    case ClauseKind::Ref: return "Ref";
    case ClauseKind::UnaryBoxOp: return "UnaryBoxOp";
    case ClauseKind::BinaryBoxOp: return "BinaryBoxOp";
    case ClauseKind::Prp: return "Prp";
    case ClauseKind::SdrsConstituent: return "SdrsConstituent";
    case ClauseKind::DiscourseRelation: return "DiscourseRelation";
    case ClauseKind::Concept: return "Concept";
    case ClauseKind::Role: return "Role";
    case ClauseKind::Comparison: return "Comparison";
  }
  return "?";
}

/// True where an argument position must hold a variable rather than a constant.
inline constexpr bool requires_variable(ClauseKind kind, std::size_t /*arg*/) {
  switch (kind) {
    case ClauseKind::Role:
    case ClauseKind::Comparison:
      return false;
    default:
      return true;
  }
}

/// One clause: `box op args...`. Concept clauses keep the lemma in `op` and
/// the sense (e.g. "n.02") in `sense`; `args` never contains the sense.
struct Clause {
  std::string box;
  ClauseKind kind = ClauseKind::Ref;
  std::string op;
  std::string sense;
  std::vector<Term> args;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;

  /// Part-of-speech letter of a concept sense ('n', 'v', 'a', 'r'), or 0.
  char pos() const { return kind == ClauseKind::Concept && !sense.empty() ? sense.front() : '\0'; }
};

struct ClausalForm {
  std::vector<Clause> clauses;
  std::optional<std::string> doc_id;

  friend bool operator==(const ClausalForm&, const ClausalForm&) = default;
};

struct OperatorTables {
  std::set<std::string, std::less<>> unary_box_ops{"NOT", "POS", "NEC"};
  std::set<std::string, std::less<>> binary_box_ops{"IMP", "DIS", "DUP"};
  std::set<std::string, std::less<>> comparison_ops{"EQU", "NEQ", "APX", "LES", "LEQ", "TPR", "TAB"};
  std::set<std::string, std::less<>> deictic_constants{"now", "speaker", "hearer"};

  bool is_deictic(std::string_view constant) const { return deictic_constants.contains(constant); }
  /// Operator-like tokens that are emitted atomically by the character codec.
  bool is_reserved(std::string_view token) const {
    return token == "REF" || token == "DRS" || token == "PRP" || unary_box_ops.contains(token) ||
           binary_box_ops.contains(token) || comparison_ops.contains(token);
  }
};

inline const OperatorTables& default_tables() {
  static const OperatorTables tables;
  return tables;
}

namespace detail {

inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace detail

/// Classifies the second field of a clause. Precedence: REF, operator tables,
/// DRS, PRP, all-caps relation, capitalised role, lowercase concept.
inline ClauseKind classify_token(std::string_view token, const OperatorTables& tables = default_tables()) {
  using namespace detail;
  if (token.empty() || token.front() == '"') throw UnclassifiableToken(std::string(token));
  if (token == "REF") return ClauseKind::Ref;
  if (tables.unary_box_ops.contains(token)) return ClauseKind::UnaryBoxOp;
  if (tables.binary_box_ops.contains(token)) return ClauseKind::BinaryBoxOp;
  if (tables.comparison_ops.contains(token)) return ClauseKind::Comparison;
  if (token == "DRS") return ClauseKind::SdrsConstituent;
  if (token == "PRP") return ClauseKind::Prp;

  const bool any_upper = std::any_of(token.begin(), token.end(), is_upper);
  const bool any_lower = std::any_of(token.begin(), token.end(), is_lower);
  const bool any_digit = std::any_of(token.begin(), token.end(), is_digit);
  if (is_digit(token.front())) throw UnclassifiableToken(std::string(token));

  if (is_upper(token.front())) {
    if (any_digit) throw UnclassifiableToken(std::string(token));
    return any_lower ? ClauseKind::Role : ClauseKind::DiscourseRelation;
  }
  if (any_upper || !any_lower) throw UnclassifiableToken(std::string(token));
  return ClauseKind::Concept;
}

/// `letter '.' digit digit`.
inline bool is_sense_shaped(std::string_view sense) {
  return sense.size() == 4 && detail::is_lower(sense[0]) && sense[1] == '.' && detail::is_digit(sense[2]) &&
         detail::is_digit(sense[3]);
}

inline bool is_known_pos(char pos) { return pos == 'n' || pos == 'v' || pos == 'a' || pos == 'r'; }

inline bool is_variable_name(std::string_view name) {
  if (name.empty() || name.front() == '"') return false;
  return std::none_of(name.begin(), name.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

/// Structural problems of a programmatically built clause, or nullopt.
inline std::optional<std::string> shape_error(const Clause& clause) {
  if (!is_variable_name(clause.box)) return "box label is not a variable";
  if (clause.args.size() != arity(clause.kind)) {
    return std::string(kind_name(clause.kind)) + " clause needs " + std::to_string(arity(clause.kind)) +
           " argument(s), found " + std::to_string(clause.args.size());
  }
  for (std::size_t i = 0; i < clause.args.size(); ++i) {
    const Term& arg = clause.args[i];
    if (requires_variable(clause.kind, i) && !arg.is_var()) return "argument " + std::to_string(i + 1) + " must be a variable";
    if (arg.is_var() && !is_variable_name(arg.text)) return "malformed variable '" + arg.text + "'";
    if (arg.is_const() && arg.text.find('"') != std::string::npos) return "constant contains a quote";
  }
  if (clause.kind == ClauseKind::Concept && !is_sense_shaped(clause.sense)) return "malformed sense '" + clause.sense + "'";
  return std::nullopt;
}

inline std::string quote(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out += '"';
  out += text;
  out += '"';
  return out;
}

inline std::string format_term(const Term& term) { return term.is_var() ? term.text : quote(term.text); }

/// Single-space separated clause line, constants re-quoted.
inline std::string format_clause(const Clause& clause) {
  std::string line = clause.box;
  line += ' ';
  line += clause.kind == ClauseKind::Ref ? std::string("REF") : clause.op;
  if (clause.kind == ClauseKind::Concept) {
    line += ' ';
    line += quote(clause.sense);
  }
  for (const Term& arg : clause.args) {
    line += ' ';
    line += format_term(arg);
  }
  return line;
}

inline Clause make_ref(std::string box, std::string referent) {
  return {std::move(box), ClauseKind::Ref, "REF", {}, {Term::var(std::move(referent))}};
}

inline Clause make_concept(std::string box, std::string lemma, std::string sense, std::string referent) {
  return {std::move(box), ClauseKind::Concept, std::move(lemma), std::move(sense), {Term::var(std::move(referent))}};
}

inline std::size_t count_non_ref(const ClausalForm& form) {
  return static_cast<std::size_t>(std::count_if(form.clauses.begin(), form.clauses.end(),
                                                [](const Clause& c) { return c.kind != ClauseKind::Ref; }));
}

}  // namespace drs
