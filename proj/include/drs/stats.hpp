#pragma once

#include <string>
#include <vector>

#include "drs/codec.hpp"
#include "drs/phenomena.hpp"

namespace drs {

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  double avg_tokens_per_sentence = 0.0;
  PhenomenonCounts phenomena;
  /// Forms that failed the checker and were left out of the phenomenon counts.
  std::size_t skipped_invalid = 0;
};

/// `sentences` are pre-tokenized; tokens are counted by whitespace.
inline CorpusStats corpus_stats(const std::vector<ClausalForm>& forms, const std::vector<std::string>& sentences,
                                const PhenomenonConfig& config = {}) {
  if (forms.size() != sentences.size()) throw LengthMismatch(forms.size(), sentences.size());
  CorpusStats out;
  out.documents = forms.size();
  out.sentences = sentences.size();
  for (PhenomenonKind k : kAllPhenomena) out.phenomena[k] = 0;
  for (const std::string& s : sentences) out.tokens += detail::words_of(s).size();
  if (out.sentences > 0) out.avg_tokens_per_sentence = static_cast<double>(out.tokens) / static_cast<double>(out.sentences);
  for (const ClausalForm& f : forms) {
    if (!check(f).valid()) {
      ++out.skipped_invalid;
      continue;
    }
    for (const auto& [kind, n] : detect_phenomena(f, config)) out.phenomena[kind] += n;
  }
  return out;
}

}  // namespace drs
