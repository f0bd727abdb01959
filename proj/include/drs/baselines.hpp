#pragma once

// Two trivial parsers: SPAR returns one fixed DRS for every sentence,
// SIM-SPAR returns the DRS of the most similar training sentence.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drs/checker.hpp"
#include "drs/embeddings.hpp"
#include "drs/io.hpp"

namespace drs {

class Spar {
 public:
  explicit Spar(ClausalForm default_form) : form_(std::move(default_form)) {
    const CheckReport report = check(form_);
    if (!report.valid()) {
      throw RequiresValidForm("SPAR default DRS is invalid: " + std::string(reason_name(*report.reason)) + ": " +
                              report.message);
    }
  }

  const ClausalForm& parse(std::string_view /*sentence*/) const { return form_; }

 private:
  ClausalForm form_;
};

struct TrainingPair {
  std::string sentence;
  ClausalForm form;
};

/// Blank-line separated blocks, each a sentence line followed by its clauses.
inline std::vector<TrainingPair> parse_training_pairs(std::string_view text,
                                                      const OperatorTables& tables = default_tables()) {
  std::vector<TrainingPair> pairs;
  const std::vector<Block> blocks = read_blocks(text);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Block clauses = blocks[i];
    TrainingPair pair;
    pair.sentence = std::string(trim(clauses.lines.front().text));
    clauses.lines.erase(clauses.lines.begin());
    pair.form = parse_block(clauses, i, tables);
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

class SimSpar {
 public:
  SimSpar(std::vector<TrainingPair> train, EmbeddingStore store) : train_(std::move(train)), store_(std::move(store)) {
    if (train_.empty()) throw EmptyTrainingSet();
    if (store_.empty()) throw EmptyFile("EmptyFile: no embeddings");
    vectors_.reserve(train_.size());
    for (const TrainingPair& p : train_) vectors_.push_back(sentence_vector(p.sentence, store_));
  }

  /// Index of the training sentence with the highest cosine; the lowest
  /// index wins ties and a query without known content words gets 0.
  std::size_t nearest_index(std::string_view sentence) const {
    const Vector q = sentence_vector(sentence, store_);
    if (norm(q) == 0.0) return 0;
    std::size_t best = 0;
    double best_score = cosine(q, vectors_[0]);
    for (std::size_t i = 1; i < vectors_.size(); ++i) {
      const double s = cosine(q, vectors_[i]);
      if (s > best_score) {
        best_score = s;
        best = i;
      }
    }
    return best;
  }

  const ClausalForm& parse(std::string_view sentence) const { return train_[nearest_index(sentence)].form; }
  const std::vector<TrainingPair>& training() const { return train_; }
  const EmbeddingStore& store() const { return store_; }

 private:
  std::vector<TrainingPair> train_;
  EmbeddingStore store_;
  std::vector<Vector> vectors_;
};

}  // namespace drs
