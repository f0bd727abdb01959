#pragma once

// Token codecs between clausal forms / sentences and seq2seq token streams.
//
// Output side, char level: variables, REF/DRS/PRP and table operators, roles,
// relations and deictic constants ("now" with its quotes) are single tokens;
// concept lemmas, senses and other constants are split into characters. A
// space token separates clause fields and stands for spaces inside constants.
//
// Output side, word level: each field is one token; a constant containing
// spaces is cut at the spaces, each space becoming a space token.
//
// SEP separates clauses. Streams are written one sequence per line, tokens
// separated by single spaces.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drs/clause.hpp"
#include "drs/io.hpp"

namespace drs {

using TokenSeq = std::vector<std::string>;

inline constexpr std::string_view kSep = "SEP";
inline constexpr std::string_view kSpace = "|||SPACE|||";
inline constexpr std::string_view kCase = "^";

enum class Level : std::uint8_t { Char, Word, CharWord };
enum class Casing : std::uint8_t { Keep, Lower, CaseFeature };

/// Splits UTF-8 text into code points; invalid bytes become single tokens.
inline std::vector<std::string> utf8_chars(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : (lead >> 3) == 0x1E ? 4 : 1;
    if (i + len > text.size()) len = 1;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) {
        len = 1;
        break;
      }
    }
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

inline char ascii_lower(char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c; }
inline char ascii_upper(char c) { return c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : c; }

inline std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

inline std::string join_tokens(const TokenSeq& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

inline TokenSeq split_tokens(std::string_view line) {
  TokenSeq out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

namespace detail {

inline void push_chars(TokenSeq& out, std::string_view text) {
  for (std::string& ch : utf8_chars(text)) {
    if (ch == " ") out.emplace_back(kSpace);
    else out.push_back(std::move(ch));
  }
}

/// Word-level pieces of a field, cutting at spaces.
inline void push_words(TokenSeq& out, std::string_view field) {
  std::size_t start = 0;
  for (;;) {
    const std::size_t space = field.find(' ', start);
    const std::string_view piece = field.substr(start, space == std::string_view::npos ? space : space - start);
    if (!piece.empty()) out.emplace_back(piece);
    if (space == std::string_view::npos) return;
    out.emplace_back(kSpace);
    start = space + 1;
  }
}

inline void encode_clause_char(TokenSeq& out, const Clause& c, const OperatorTables& tables) {
  auto space = [&] { out.emplace_back(kSpace); };
  out.push_back(c.box);
  space();
  if (c.kind == ClauseKind::Concept) {
    push_chars(out, c.op);
    space();
    push_chars(out, quote(c.sense));
  } else {
    out.push_back(c.op);
  }
  for (const Term& t : c.args) {
    space();
    if (t.is_var() || tables.is_deictic(t.text)) out.push_back(format_term(t));
    else push_chars(out, quote(t.text));
  }
}

inline void encode_clause_word(TokenSeq& out, const Clause& c) {
  out.push_back(c.box);
  out.push_back(c.op);
  if (c.kind == ClauseKind::Concept) out.push_back(quote(c.sense));
  for (const Term& t : c.args) {
    if (t.is_var()) out.push_back(t.text);
    else push_words(out, quote(t.text));
  }
}

/// Clause text of one SEP-delimited group.
inline std::string group_text(const TokenSeq& tokens, std::size_t begin, std::size_t end, Level level) {
  std::string text;
  bool joinable = false;
  for (std::size_t i = begin; i < end; ++i) {
    if (tokens[i] == kSpace) {
      text += ' ';
      joinable = false;
      continue;
    }
    if (level == Level::Word && joinable) text += ' ';
    text += tokens[i];
    joinable = true;
  }
  return text;
}

}  // namespace detail

inline TokenSeq encode_output(const ClausalForm& form, Level level, const OperatorTables& tables = default_tables()) {
  TokenSeq out;
  for (std::size_t i = 0; i < form.clauses.size(); ++i) {
    if (i > 0) out.emplace_back(kSep);
    if (level == Level::Word) detail::encode_clause_word(out, form.clauses[i]);
    else detail::encode_clause_char(out, form.clauses[i], tables);
  }
  return out;
}

/// Lenient inverse of encode_output. Clauses that do not parse are reported
/// in `errors` (document 0, line = clause position) and left out of the form.
inline PartialForm decode_output(const TokenSeq& tokens, Level level, const OperatorTables& tables = default_tables()) {
  PartialForm out;
  std::size_t begin = 0;
  std::size_t group = 0;
  for (std::size_t i = 0; i <= tokens.size(); ++i) {
    if (i < tokens.size() && tokens[i] != kSep) continue;
    if (i > begin) {
      ++group;
      const std::string text = detail::group_text(tokens, begin, i, level);
      try {
        out.form.clauses.push_back(parse_clause(text, tables));
      } catch (const MalformedClause& e) {
        out.errors.push_back(e.located(0, group));
      }
    }
    begin = i + 1;
  }
  return out;
}

namespace detail {

inline void push_input_chars(TokenSeq& out, std::string_view word, Casing casing) {
  for (std::string& ch : utf8_chars(word)) {
    if (ch == " ") {
      out.emplace_back(kSpace);
      continue;
    }
    if (ch.size() == 1 && casing != Casing::Keep && ascii_lower(ch[0]) != ch[0]) {
      if (casing == Casing::CaseFeature) out.emplace_back(kCase);
      ch[0] = ascii_lower(ch[0]);
    }
    out.push_back(std::move(ch));
  }
}

inline std::vector<std::string_view> words_of(std::string_view sentence) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < sentence.size()) {
    while (i < sentence.size() && is_space(sentence[i])) ++i;
    const std::size_t start = i;
    while (i < sentence.size() && !is_space(sentence[i])) ++i;
    if (i > start) words.push_back(sentence.substr(start, i - start));
  }
  return words;
}

inline void push_input_word(TokenSeq& out, std::string_view word, Casing casing) {
  std::string w(word);
  if (casing == Casing::Lower) {
    w = ascii_lower(w);
  } else if (casing == Casing::CaseFeature && ascii_lower(w[0]) != w[0]) {
    out.emplace_back(kCase);
    w[0] = ascii_lower(w[0]);
  }
  out.push_back(std::move(w));
}

}  // namespace detail

/// Char level keeps every character, spaces as the space token. Word and
/// CharWord levels split on whitespace runs, so decoding normalises spacing.
/// CharWord emits, per word, its characters and then the word itself
/// (lowercased unless casing is Keep); words are separated by space tokens.
inline TokenSeq encode_input(std::string_view sentence, Level level, Casing casing) {
  TokenSeq out;
  if (level == Level::Char) {
    detail::push_input_chars(out, sentence, casing);
    return out;
  }
  const auto words = detail::words_of(sentence);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (level == Level::Word) {
      detail::push_input_word(out, words[i], casing);
      continue;
    }
    if (i > 0) out.emplace_back(kSpace);
    detail::push_input_chars(out, words[i], casing);
    out.push_back(casing == Casing::Keep ? std::string(words[i]) : ascii_lower(words[i]));
  }
  return out;
}

/// Inverse of encode_input. Lowercasing is not undone.
inline std::string decode_input(const TokenSeq& tokens, Level level, Casing casing) {
  std::string out;
  bool upper_next = false;
  auto append = [&](std::string token) {
    if (upper_next && !token.empty()) token[0] = ascii_upper(token[0]);
    upper_next = false;
    out += token;
  };
  const bool marks = casing == Casing::CaseFeature;
  if (level == Level::Word) {
    bool first = true;
    for (const std::string& t : tokens) {
      if (marks && t == kCase) {
        upper_next = true;
        continue;
      }
      if (!first) out += ' ';
      first = false;
      append(t);
    }
    return out;
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (level == Level::CharWord && (i + 1 == tokens.size() || tokens[i + 1] == kSpace)) continue;  // word token
    if (t == kSpace) out += ' ';
    else if (marks && t == kCase) upper_next = true;
    else append(t);
  }
  return out;
}

}  // namespace drs
