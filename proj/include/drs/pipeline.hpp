#pragma once

// Evaluation path for raw model output: token stream -> clauses -> restored
// variable names -> checker -> score. A document that fails any step scores
// zero matched clauses but keeps its decoded clauses in the precision count.

#include <string>
#include <string_view>
#include <vector>

#include "drs/checker.hpp"
#include "drs/codec.hpp"
#include "drs/matcher.hpp"
#include "drs/naming.hpp"

namespace drs {

enum class DocStatus : std::uint8_t { Ok, Syntactic, Semantic };

inline constexpr std::string_view status_name(DocStatus s) {
  switch (s) {
    case DocStatus::Ok: return "ok";
    case DocStatus::Syntactic: return "syntax";
    case DocStatus::Semantic: return "semantic";
  }
  return "?";
}

struct PipelineConfig {
  Level level = Level::Char;
  NamingScheme scheme = NamingScheme::Relative;
  MatchConfig match;
  const OperatorTables* tables = &default_tables();
};

struct PipelineDoc {
  DocStatus status = DocStatus::Ok;
  std::string detail;  // first error for ill-formed documents
  MatchResult score;
};

struct PipelineReport {
  std::vector<PipelineDoc> documents;
  MatchResult total;
  std::size_t syntactic = 0;
  std::size_t semantic = 0;

  double ill_formed_rate() const {
    return documents.empty() ? 0.0 : static_cast<double>(syntactic + semantic) / static_cast<double>(documents.size());
  }
  double syntactic_rate() const {
    return documents.empty() ? 0.0 : static_cast<double>(syntactic) / static_cast<double>(documents.size());
  }
  double semantic_rate() const {
    return documents.empty() ? 0.0 : static_cast<double>(semantic) / static_cast<double>(documents.size());
  }
};

inline PipelineDoc run_document(const TokenSeq& tokens, const ClausalForm& gold, const PipelineConfig& config) {
  PipelineDoc doc;
  PartialForm decoded = decode_output(tokens, config.level, *config.tables);
  auto fail = [&](DocStatus status, std::string why) {
    doc.status = status;
    doc.detail = std::move(why);
    doc.score = MatchResult::from_counts(0, count_non_ref(decoded.form), count_non_ref(gold));
    return doc;
  };
  const CheckReport gold_report = check(gold);
  if (!gold_report.valid()) throw InvalidGold("InvalidGold: " + std::string(reason_name(*gold_report.reason)));
  if (!decoded.errors.empty()) return fail(DocStatus::Syntactic, decoded.errors.front().what());
  ClausalForm restored;
  try {
    restored = restore(decoded.form, config.scheme);
  } catch (const InputError& e) {
    return fail(DocStatus::Syntactic, e.what());
  }
  const CheckReport report = check(restored);
  if (!report.valid()) {
    const bool syntax = *report.reason == Reason::SyntaxError;
    return fail(syntax ? DocStatus::Syntactic : DocStatus::Semantic,
                std::string(reason_name(*report.reason)) + ": " + report.message);
  }
  doc.score = match_forms(restored, gold, config.match);
  return doc;
}

inline PipelineReport run_pipeline(const std::vector<TokenSeq>& sys, const std::vector<ClausalForm>& gold,
                                   const PipelineConfig& config = {}) {
  if (sys.size() != gold.size()) throw LengthMismatch(sys.size(), gold.size());
  PipelineReport out;
  std::vector<MatchResult> scores;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out.documents.push_back(run_document(sys[i], gold[i], config));
    scores.push_back(out.documents.back().score);
    if (out.documents.back().status == DocStatus::Syntactic) ++out.syntactic;
    if (out.documents.back().status == DocStatus::Semantic) ++out.semantic;
  }
  out.total = micro_average(scores);
  return out;
}

/// One token sequence per line; a blank line is an empty sequence.
inline std::vector<TokenSeq> read_token_lines(std::string_view text) {
  std::vector<TokenSeq> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(split_tokens(line));
    pos = end + 1;
  }
  return out;
}

}  // namespace drs
