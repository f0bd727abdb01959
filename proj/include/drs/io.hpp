#pragma once

// Reading and writing the clause file format.
//
//   * one clause per line, whitespace separated fields
//   * double-quoted constants, kept whole even when they contain spaces
//   * '%' outside quotes starts a comment running to end of line
//   * DRSs separated by one or more blank lines
//   * a comment of the form `% id: NAME` names the DRS it appears in

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "drs/clause.hpp"
#include "drs/errors.hpp"

namespace drs {

struct FieldToken {
  std::string text;
  bool quoted = false;
  std::size_t column = 0;  // 1-based
};

/// Part of `line` preceding the first '%' outside double quotes.
inline std::string_view strip_comment(std::string_view line) {
  bool in_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_quote = !in_quote;
    else if (line[i] == '%' && !in_quote) return line.substr(0, i);
  }
  return line;
}

inline std::string_view trim(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

/// Splits a comment-free clause line into fields. Throws MalformedClause on an
/// unterminated quote or a quote glued to other characters.
inline std::vector<FieldToken> split_fields(std::string_view line) {
  std::vector<FieldToken> fields;
  std::size_t i = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    FieldToken field;
    field.column = i + 1;
    if (line[i] == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) throw MalformedClause("unterminated quote", std::string(line), i + 1);
      if (close + 1 < line.size() && !is_space(line[close + 1])) {
        throw MalformedClause("characters after closing quote", std::string(line), close + 2);
      }
      field.text = std::string(line.substr(i + 1, close - i - 1));
      field.quoted = true;
      i = close + 1;
    } else {
      const std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) {
        if (line[i] == '"') throw MalformedClause("quote inside unquoted field", std::string(line), i + 1);
        ++i;
      }
      field.text = std::string(line.substr(start, i - start));
    }
    fields.push_back(std::move(field));
  }
  return fields;
}

/// Parses one clause line. Unknown part-of-speech letters in a concept sense
/// are reported through `warnings` rather than rejected.
inline Clause parse_clause(std::string_view raw, const OperatorTables& tables = default_tables(),
                           std::vector<std::string>* warnings = nullptr) {
  const std::string line(trim(strip_comment(raw)));
  if (line.empty()) throw MalformedClause("empty clause", std::string(raw), 0);
  const std::vector<FieldToken> fields = split_fields(line);
  if (fields.size() < 2) throw MalformedClause("clause needs a box label and an operator", line, 1);
  if (fields[0].quoted) throw MalformedClause("box label must be a variable", line, fields[0].column);
  if (fields[1].quoted) throw MalformedClause("constant in operator position", line, fields[1].column);

  Clause clause;
  clause.box = fields[0].text;
  clause.op = fields[1].text;
  try {
    clause.kind = classify_token(fields[1].text, tables);
  } catch (const UnclassifiableToken& e) {
    throw MalformedClause(e.what(), line, fields[1].column);
  }

  std::size_t first_arg = 2;
  if (clause.kind == ClauseKind::Concept) {
    if (fields.size() < 3 || !fields[2].quoted) {
      throw MalformedClause("concept needs a quoted sense", line, fields.size() < 3 ? 0 : fields[2].column);
    }
    if (!is_sense_shaped(fields[2].text)) {
      throw MalformedClause("malformed sense '" + fields[2].text + "'", line, fields[2].column);
    }
    if (!is_known_pos(fields[2].text.front()) && warnings != nullptr) {
      warnings->push_back("unknown part of speech in sense \"" + fields[2].text + "\"");
    }
    clause.sense = fields[2].text;
    first_arg = 3;
  }

  const std::size_t expected = arity(clause.kind);
  const std::size_t found = fields.size() - first_arg;
  if (found != expected) {
    std::string message = std::string(kind_name(clause.kind)) + " '" + clause.op + "' takes " +
                          std::to_string(expected) + " argument(s), found " + std::to_string(found);
    if (clause.kind == ClauseKind::DiscourseRelation) message = "unknown all-caps operator with arity " + std::to_string(found);
    throw MalformedClause(message, line, fields.back().column);
  }
  for (std::size_t i = first_arg; i < fields.size(); ++i) {
    const std::size_t index = i - first_arg;
    if (fields[i].quoted) {
      if (requires_variable(clause.kind, index)) throw MalformedClause("argument must be a variable", line, fields[i].column);
      clause.args.push_back(Term::constant(fields[i].text));
    } else {
      clause.args.push_back(Term::var(fields[i].text));
    }
  }
  return clause;
}

struct SourceLine {
  std::size_t number = 0;  // 1-based
  std::string text;
};

/// A blank-line delimited block, with comment-only lines removed.
struct Block {
  std::vector<SourceLine> lines;
  std::optional<std::string> doc_id;
};

namespace detail {

inline std::optional<std::string> id_comment(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() != '%') return std::nullopt;
  while (!line.empty() && line.front() == '%') line.remove_prefix(1);
  line = trim(line);
  if (!line.starts_with("id:")) return std::nullopt;
  line = trim(line.substr(3));
  if (line.empty()) return std::nullopt;
  return std::string(line);
}

}  // namespace detail

inline std::vector<Block> read_blocks(std::string_view text) {
  std::vector<Block> blocks;
  Block current;
  bool open = false;
  auto flush = [&] {
    if (!current.lines.empty()) blocks.push_back(std::move(current));
    current = Block{};
    open = false;
  };
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    if (trim(line).empty()) {
      if (open) flush();
    } else {
      open = true;
      if (auto id = detail::id_comment(line)) {
        current.doc_id = std::move(id);
      } else if (!trim(strip_comment(line)).empty()) {
        current.lines.push_back({number, std::string(line)});
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  flush();
  return blocks;
}

inline ClausalForm parse_block(const Block& block, std::size_t document, const OperatorTables& tables = default_tables(),
                               std::vector<std::string>* warnings = nullptr) {
  ClausalForm form;
  form.doc_id = block.doc_id;
  form.clauses.reserve(block.lines.size());
  for (const SourceLine& line : block.lines) {
    try {
      form.clauses.push_back(parse_clause(line.text, tables, warnings));
    } catch (const MalformedClause& e) {
      throw e.located(document, line.number);
    }
  }
  return form;
}

inline std::vector<ClausalForm> parse_corpus(std::string_view text, const OperatorTables& tables = default_tables(),
                                             std::vector<std::string>* warnings = nullptr) {
  std::vector<ClausalForm> forms;
  const std::vector<Block> blocks = read_blocks(text);
  forms.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) forms.push_back(parse_block(blocks[i], i, tables, warnings));
  return forms;
}

/// Result of lenient parsing: every clause that parsed, plus the failures.
struct PartialForm {
  ClausalForm form;
  std::vector<MalformedClause> errors;
  bool syntactically_well_formed() const { return errors.empty(); }
};

inline PartialForm parse_block_lenient(const Block& block, std::size_t document,
                                       const OperatorTables& tables = default_tables()) {
  PartialForm out;
  out.form.doc_id = block.doc_id;
  for (const SourceLine& line : block.lines) {
    try {
      out.form.clauses.push_back(parse_clause(line.text, tables));
    } catch (const MalformedClause& e) {
      out.errors.push_back(e.located(document, line.number));
    }
  }
  return out;
}

inline std::string serialize(const ClausalForm& form) {
  std::string out;
  if (form.doc_id) out += "% id: " + *form.doc_id + "\n";
  for (const Clause& clause : form.clauses) {
    out += format_clause(clause);
    out += '\n';
  }
  return out;
}

inline std::string serialize_corpus(const std::vector<ClausalForm>& forms) {
  std::string out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i > 0) out += '\n';
    out += serialize(forms[i]);
  }
  return out;
}

/// True iff every non-comment line parses with the right shape and arity.
inline bool is_well_formed_syntax(std::string_view text, const OperatorTables& tables = default_tables()) {
  for (const Block& block : read_blocks(text)) {
    for (const SourceLine& line : block.lines) {
      try {
        parse_clause(line.text, tables);
      } catch (const MalformedClause&) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_well_formed_syntax(const ClausalForm& form) {
  return std::all_of(form.clauses.begin(), form.clauses.end(), [](const Clause& c) { return !shape_error(c); });
}

/// Operator table file: tokens one per line under `[unary]`, `[binary]`,
/// `[comparison]` or `[deictic]` headers. Entries extend the defaults.
inline OperatorTables parse_operator_tables(std::string_view text, OperatorTables tables = default_tables()) {
  std::set<std::string, std::less<>>* section = nullptr;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == '%') continue;
    if (line.front() == '[') {
      if (line == "[unary]") section = &tables.unary_box_ops;
      else if (line == "[binary]") section = &tables.binary_box_ops;
      else if (line == "[comparison]") section = &tables.comparison_ops;
      else if (line == "[deictic]") section = &tables.deictic_constants;
      else throw ConfigError("operator tables line " + std::to_string(number) + ": unknown section " + std::string(line));
      continue;
    }
    if (section == nullptr) throw ConfigError("operator tables line " + std::to_string(number) + ": entry before any section");
    if (line.find_first_of(" \t") != std::string_view::npos) {
      throw ConfigError("operator tables line " + std::to_string(number) + ": one token per line");
    }
    section->insert(std::string(line));
  }
  return tables;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace drs
