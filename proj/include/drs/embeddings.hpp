#pragma once

// Word vectors in the GloVe text format: one word per line followed by its
// components, space separated.

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "drs/codec.hpp"
#include "drs/errors.hpp"
#include "drs/io.hpp"

namespace drs {

using Vector = std::vector<double>;

struct EmbeddingStore {
  std::size_t dim = 0;
  std::unordered_map<std::string, Vector> vectors;
  std::unordered_set<std::string> stopwords;
  /// Lowercase (ASCII) tokens before lookup.
  bool lowercase = false;

  std::size_t size() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }

  const Vector* find(std::string_view word) const {
    auto it = vectors.find(lowercase ? ascii_lower(word) : std::string(word));
    return it == vectors.end() ? nullptr : &it->second;
  }

  bool is_stopword(std::string_view word) const { return stopwords.contains(ascii_lower(word)); }
};

inline EmbeddingStore load_embeddings(std::istream& in, std::optional<std::size_t> expected_dim = std::nullopt,
                                      std::vector<std::string>* warnings = nullptr) {
  EmbeddingStore store;
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    Vector v;
    for (std::string x; fields >> x;) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(x, &used));
        if (used != x.size()) throw std::invalid_argument(x);
      } catch (const std::exception&) {
        throw InputError("embeddings line " + std::to_string(number) + ": not a number '" + x + "'");
      }
    }
    const std::size_t want = expected_dim ? *expected_dim : store.dim;
    if (want == 0 && v.empty()) throw DimensionMismatch(number, 1, 0);
    if (want != 0 && v.size() != want) throw DimensionMismatch(number, want, v.size());
    store.dim = v.size();
    if (!store.vectors.emplace(word, std::move(v)).second && warnings != nullptr) {
      warnings->push_back("embeddings line " + std::to_string(number) + ": duplicate word '" + word + "' ignored");
    }
  }
  if (store.vectors.empty()) throw EmptyFile("EmptyFile: no embeddings found");
  return store;
}

inline EmbeddingStore load_embeddings(const std::string& path, std::optional<std::size_t> expected_dim = std::nullopt,
                                      std::vector<std::string>* warnings = nullptr) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_embeddings(in, expected_dim, warnings);
}

/// One word per line; '#' starts a comment line.
inline std::unordered_set<std::string> parse_stopwords(std::string_view text) {
  std::unordered_set<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    const std::string_view word = trim(line);
    if (!word.empty() && word.front() != '#') out.insert(ascii_lower(word));
  }
  return out;
}

/// Whitespace tokens with surrounding ASCII punctuation removed.
inline std::vector<std::string> sentence_tokens(std::string_view sentence) {
  std::vector<std::string> out;
  auto punct = [](char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; };
  for (std::string_view word : detail::words_of(sentence)) {
    while (!word.empty() && punct(word.front())) word.remove_prefix(1);
    while (!word.empty() && punct(word.back())) word.remove_suffix(1);
    if (!word.empty()) out.emplace_back(word);
  }
  return out;
}

/// Mean of the in-vocabulary, non-stopword token vectors; zero when none.
inline Vector sentence_vector(std::string_view sentence, const EmbeddingStore& store) {
  Vector sum(store.dim, 0.0);
  std::size_t used = 0;
  for (const std::string& token : sentence_tokens(sentence)) {
    if (store.is_stopword(token)) continue;
    const Vector* v = store.find(token);
    if (v == nullptr) continue;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
    ++used;
  }
  if (used > 0)
    for (double& x : sum) x /= static_cast<double>(used);
  return sum;
}

inline double norm(const Vector& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Cosine similarity; 0 when either vector has zero norm.
inline double cosine(const Vector& a, const Vector& b) {
  const double na = norm(a), nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) dot += a[i] * b[i];
  return dot / (na * nb);
}

}  // namespace drs
