#pragma once

// Clause-matching F-score between a system DRS and a gold DRS.
//
// Variable names carry no meaning, so scoring is a search for the
// type-respecting injective mapping from system variables to gold variables
// that maximises the number of matching clauses. The search is steepest-ascent
// hill climbing with restarts: restart 0 starts from a greedy clause-anchored
// mapping, odd restarts from the same greedy anchoring over a shuffled clause
// order, even ones from seeded random mappings. Moves reassign one variable
// (swapping on collision); when none helps, a move that makes one unmatched
// clause match by reassigning all its variables at once is tried. REF clauses
// never count.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drs/checker.hpp"
#include "drs/clause.hpp"
#include "drs/errors.hpp"

namespace drs {

/// Maps `lemma.p.nn` sense keys to synset identifiers.
class SynsetTable {
 public:
  void add(std::string key, std::string synset) { ids_.insert_or_assign(std::move(key), std::move(synset)); }

  std::optional<std::string> synset(std::string_view key) const {
    auto it = ids_.find(std::string(key));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  /// Identity used when comparing concepts: the synset when known, otherwise
  /// the literal `lemma.sense`.
  std::string canonical(std::string_view lemma, std::string_view sense) const {
    std::string key(lemma);
    key += '.';
    key += sense;
    if (auto id = synset(key)) return "\x01" + *id;
    return key;
  }

  std::size_t size() const { return ids_.size(); }

  /// Lines `lemma.p.nn<TAB>synset_id`; blank lines and '#' comments skipped.
  static SynsetTable parse(std::string_view text) {
    SynsetTable table;
    std::istringstream in{std::string(text)};
    std::size_t number = 0;
    for (std::string line; std::getline(in, line);) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
        throw InputError("synset table line " + std::to_string(number) + ": expected key<TAB>synset");
      }
      table.add(line.substr(0, tab), line.substr(tab + 1));
    }
    return table;
  }

 private:
  std::unordered_map<std::string, std::string> ids_;
};

inline std::string concept_identity(const Clause& clause, const SynsetTable* synsets) {
  if (synsets != nullptr) return synsets->canonical(clause.op, clause.sense);
  return clause.op + "." + clause.sense;
}

/// System variable -> gold variable.
using VarMapping = std::map<std::string, std::string, std::less<>>;

struct MatchResult {
  std::size_t matched = 0;
  std::size_t sys_total = 0;
  std::size_t gold_total = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  VarMapping mapping;
  int restarts_used = 0;

  static MatchResult from_counts(std::size_t matched, std::size_t sys_total, std::size_t gold_total) {
    MatchResult r;
    r.matched = matched;
    r.sys_total = sys_total;
    r.gold_total = gold_total;
    r.precision = sys_total == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(sys_total);
    r.recall = gold_total == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(gold_total);
    // 2PR/(P+R) == 2m/(s+g), evaluated in the form with one rounding step.
    r.f1 = matched == 0 ? 0.0 : 2.0 * static_cast<double>(matched) / static_cast<double>(sys_total + gold_total);
    return r;
  }
};

struct MatchConfig {
  int restarts = 20;
  std::uint64_t seed = 1;
  const SynsetTable* synsets = nullptr;
};

inline bool clause_match(const Clause& sys, const Clause& gold, const VarMapping& mapping,
                         const SynsetTable* synsets = nullptr) {
  if (sys.kind == ClauseKind::Ref || gold.kind == ClauseKind::Ref || sys.kind != gold.kind) return false;
  if (sys.kind == ClauseKind::Concept) {
    if (concept_identity(sys, synsets) != concept_identity(gold, synsets)) return false;
  } else if (sys.op != gold.op) {
    return false;
  }
  auto mapped_to = [&](const std::string& from, const std::string& to) {
    auto it = mapping.find(from);
    return it != mapping.end() && it->second == to;
  };
  if (!mapped_to(sys.box, gold.box) || sys.args.size() != gold.args.size()) return false;
  for (std::size_t i = 0; i < sys.args.size(); ++i) {
    const Term& s = sys.args[i];
    const Term& g = gold.args[i];
    if (s.kind != g.kind) return false;
    if (s.is_var() ? !mapped_to(s.text, g.text) : s.text != g.text) return false;
  }
  return true;
}

/// Size of the multiset intersection of translated system clauses and gold
/// clauses under a fixed mapping. Clauses failing `keep` are ignored on both sides.
template <typename Keep>
std::size_t count_matches(const ClausalForm& sys, const ClausalForm& gold, const VarMapping& mapping,
                          const SynsetTable* synsets, Keep keep) {
  auto key_of = [&](const Clause& c, const VarMapping* rename) -> std::optional<std::string> {
    std::string key(1, static_cast<char>('0' + static_cast<int>(c.kind)));
    key += '\x1f';
    key += c.kind == ClauseKind::Concept ? concept_identity(c, synsets) : c.op;
    auto var = [&](const std::string& name) -> std::optional<std::string> {
      if (rename == nullptr) return name;
      auto it = rename->find(name);
      if (it == rename->end()) return std::nullopt;
      return it->second;
    };
    auto box = var(c.box);
    if (!box) return std::nullopt;
    key += "\x1fV" + *box;
    for (const Term& t : c.args) {
      if (t.is_var()) {
        auto v = var(t.text);
        if (!v) return std::nullopt;
        key += "\x1fV" + *v;
      } else {
        key += "\x1f" "C" + t.text;
      }
    }
    return key;
  };
  std::unordered_map<std::string, std::size_t> gold_counts;
  for (const Clause& c : gold.clauses)
    if (c.kind != ClauseKind::Ref && keep(c)) ++gold_counts[*key_of(c, nullptr)];
  std::size_t matched = 0;
  for (const Clause& c : sys.clauses) {
    if (c.kind == ClauseKind::Ref || !keep(c)) continue;
    auto key = key_of(c, &mapping);
    if (!key) continue;
    auto it = gold_counts.find(*key);
    if (it != gold_counts.end() && it->second > 0) {
      --it->second;
      ++matched;
    }
  }
  return matched;
}

inline std::size_t count_matches(const ClausalForm& sys, const ClausalForm& gold, const VarMapping& mapping,
                                 const SynsetTable* synsets = nullptr) {
  return count_matches(sys, gold, mapping, synsets, [](const Clause&) { return true; });
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for restart `r` under master seed `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t r) { return splitmix64(seed ^ splitmix64(r + 1)); }

inline std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace detail

/// Interned scoring problem: variables as indices, each system clause with the
/// gold clause classes it could match and the variable pairs each would require.
class MatchProblem {
 public:
  struct Candidate {
    int cls = -1;
    std::vector<std::pair<int, int>> pairs;  // (system var, gold var)
  };

  MatchProblem(const ClausalForm& sys, const ClausalForm& gold, const SynsetTable* synsets = nullptr) {
    const TypingTable sys_types = induce_types(sys);
    const TypingTable gold_types = induce_types(gold);
    for (const auto& [name, entry] : sys_types.entries) add_var(sys_vars_, sys_type_, sys_index_, name, entry.type);
    for (const auto& [name, entry] : gold_types.entries) add_var(gold_vars_, gold_type_, gold_index_, name, entry.type);

    std::unordered_map<std::string, std::vector<int>> classes_by_head;
    std::unordered_map<std::string, int> class_ids;
    std::vector<std::vector<int>> class_vars;
    for (const Clause& c : gold.clauses) {
      if (c.kind == ClauseKind::Ref) continue;
      ++gold_total_;
      auto [head, vars] = intern(c, synsets, gold_index_);
      std::string full = head;
      for (int v : vars) full += "\x1f" + std::to_string(v);
      auto [it, inserted] = class_ids.try_emplace(full, static_cast<int>(class_count_.size()));
      if (inserted) {
        class_count_.push_back(0);
        class_vars.push_back(vars);
        classes_by_head[head].push_back(it->second);
      }
      ++class_count_[it->second];
    }

    var_clauses_.resize(sys_vars_.size());
    for (const Clause& c : sys.clauses) {
      if (c.kind == ClauseKind::Ref) continue;
      ++sys_total_;
      auto [head, vars] = intern(c, synsets, sys_index_);
      const int index = static_cast<int>(candidates_.size());
      candidates_.emplace_back();
      std::vector<int> seen;
      for (int v : vars) {
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
          seen.push_back(v);
          var_clauses_[v].push_back(index);
        }
      }
      auto heads = classes_by_head.find(head);
      if (heads == classes_by_head.end()) continue;
      for (int cls : heads->second) {
        if (auto pairs = requirements(vars, class_vars[cls])) candidates_.back().push_back({cls, std::move(*pairs)});
      }
    }
  }

  std::size_t sys_var_count() const { return sys_vars_.size(); }
  std::size_t gold_var_count() const { return gold_vars_.size(); }
  const std::string& sys_var(int i) const { return sys_vars_[i]; }
  const std::string& gold_var(int i) const { return gold_vars_[i]; }
  VarType sys_type(int i) const { return sys_type_[i]; }
  VarType gold_type(int i) const { return gold_type_[i]; }
  std::optional<int> sys_index(std::string_view name) const { return lookup(sys_index_, name); }
  std::optional<int> gold_index(std::string_view name) const { return lookup(gold_index_, name); }

  std::size_t sys_total() const { return sys_total_; }
  std::size_t gold_total() const { return gold_total_; }
  std::size_t clause_count() const { return candidates_.size(); }
  const std::vector<Candidate>& candidates(int clause) const { return candidates_[clause]; }
  const std::vector<int>& clauses_of(int sys_var) const { return var_clauses_[sys_var]; }
  int class_count(int cls) const { return class_count_[cls]; }
  std::size_t class_total() const { return class_count_.size(); }

 private:
  static void add_var(std::vector<std::string>& names, std::vector<VarType>& types,
                      std::map<std::string, int, std::less<>>& index, const std::string& name, VarType type) {
    index.emplace(name, static_cast<int>(names.size()));
    names.push_back(name);
    types.push_back(type);
  }

  static std::optional<int> lookup(const std::map<std::string, int, std::less<>>& index, std::string_view name) {
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  static std::pair<std::string, std::vector<int>> intern(const Clause& c, const SynsetTable* synsets,
                                                         const std::map<std::string, int, std::less<>>& index) {
    std::string head(1, static_cast<char>('0' + static_cast<int>(c.kind)));
    head += '\x1f';
    head += c.kind == ClauseKind::Concept ? concept_identity(c, synsets) : c.op;
    std::vector<int> vars{index.find(c.box)->second};
    for (const Term& t : c.args) {
      if (t.is_var()) {
        head += "\x1fV";
        vars.push_back(index.find(t.text)->second);
      } else {
        head += "\x1f" "C" + t.text;
      }
    }
    return {std::move(head), std::move(vars)};
  }

  /// Variable pairs forcing system vars onto gold vars, or nullopt when the
  /// repetition pattern makes the match impossible under an injection.
  std::optional<std::vector<std::pair<int, int>>> requirements(const std::vector<int>& sys,
                                                               const std::vector<int>& gold) const {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      if (sys_type_[sys[i]] != gold_type_[gold[i]]) return std::nullopt;
      bool duplicate = false;
      for (auto [s, g] : pairs) {
        if ((s == sys[i]) != (g == gold[i])) return std::nullopt;
        if (s == sys[i]) duplicate = true;
      }
      if (!duplicate) pairs.emplace_back(sys[i], gold[i]);
    }
    return pairs;
  }

  std::vector<std::string> sys_vars_, gold_vars_;
  std::vector<VarType> sys_type_, gold_type_;
  std::map<std::string, int, std::less<>> sys_index_, gold_index_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<std::vector<int>> var_clauses_;
  std::vector<int> class_count_;
  std::size_t sys_total_ = 0;
  std::size_t gold_total_ = 0;
};

/// Mutable search state over a MatchProblem with incremental scoring.
class MappingSearch {
 public:
  explicit MappingSearch(const MatchProblem& problem)
      : p_(problem),
        map_(problem.sys_var_count(), -1),
        inv_(problem.gold_var_count(), -1),
        hit_(problem.clause_count(), -1),
        hits_(problem.class_total(), 0),
        stamp_(problem.clause_count(), 0) {}

  int score() const { return score_; }
  int image(int sys_var) const { return map_[sys_var]; }

  void reset() {
    std::fill(map_.begin(), map_.end(), -1);
    std::fill(inv_.begin(), inv_.end(), -1);
    std::fill(hit_.begin(), hit_.end(), -1);
    std::fill(hits_.begin(), hits_.end(), 0);
    score_ = 0;
  }

  /// Maps s to g; a system variable previously on g takes over s's old image.
  void apply(int s, int g) {
    const int s2 = inv_[g];
    const int old = map_[s];
    raw_move(s, g, s2, old);
    rescore(s, s2, nullptr);
  }

  /// Score change that apply(s, g) would cause.
  int gain(int s, int g) {
    const int s2 = inv_[g];
    const int old = map_[s];
    const int before = score_;
    raw_move(s, g, s2, old);
    changes_.clear();
    rescore(s, s2, &changes_);
    const int delta = score_ - before;
    // undo
    map_[s] = old;
    if (old >= 0) inv_[old] = s;
    inv_[g] = s2;
    if (s2 >= 0) map_[s2] = g;
    for (auto it = changes_.rbegin(); it != changes_.rend(); ++it) {
      remove(hit_[it->first]);
      add(it->second);
      hit_[it->first] = it->second;
    }
    return delta;
  }

  /// Steepest ascent until no single assignment or swap improves the score.
  void climb() {
    for (;;) {
      int best = 0, best_s = -1, best_g = -1;
      for (int s = 0; s < static_cast<int>(map_.size()); ++s) {
        if (p_.clauses_of(s).empty()) continue;
        for (int g = 0; g < static_cast<int>(inv_.size()); ++g) {
          if (g == map_[s] || p_.sys_type(s) != p_.gold_type(g)) continue;
          const int delta = gain(s, g);
          if (delta > best) {
            best = delta;
            best_s = s;
            best_g = g;
          }
        }
      }
      if (best_s >= 0) {
        apply(best_s, best_g);
        continue;
      }
      if (!clause_move()) return;
    }
  }

  /// Greedy start: accept each candidate clause match whose variable pairs
  /// are consistent with what is mapped so far; concept clauses first.
  void anchor(const ClausalForm& sys) {
    reset();
    std::vector<int> order;
    std::vector<int> concept_first, rest;
    int index = 0;
    for (const Clause& c : sys.clauses) {
      if (c.kind == ClauseKind::Ref) continue;
      (c.kind == ClauseKind::Concept ? concept_first : rest).push_back(index++);
    }
    order = concept_first;
    order.insert(order.end(), rest.begin(), rest.end());
    for (int clause : order) take_first_compatible(clause, 0);
  }

  /// Greedy start over a random clause order, trying candidates from a
  /// random offset.
  void anchor_shuffled(std::mt19937_64& rng) {
    reset();
    std::vector<int> order(p_.clause_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[detail::below(rng, i)]);
    for (int clause : order) {
      const std::size_t n = p_.candidates(clause).size();
      if (n > 0) take_first_compatible(clause, detail::below(rng, n));
    }
  }

  void randomize(std::mt19937_64& rng) {
    reset();
    std::vector<int> order(map_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[detail::below(rng, i)]);
    std::vector<int> free;
    for (int s : order) {
      free.clear();
      for (int g = 0; g < static_cast<int>(inv_.size()); ++g)
        if (inv_[g] < 0 && p_.gold_type(g) == p_.sys_type(s)) free.push_back(g);
      if (!free.empty()) apply(s, free[detail::below(rng, free.size())]);
    }
  }

  VarMapping mapping() const {
    VarMapping out;
    for (std::size_t s = 0; s < map_.size(); ++s)
      if (map_[s] >= 0) out.emplace(p_.sys_var(static_cast<int>(s)), p_.gold_var(map_[s]));
    return out;
  }

 private:
  struct Snapshot {
    std::vector<int> map, inv, hit, hits;
    int score;
  };
  Snapshot save() const { return {map_, inv_, hit_, hits_, score_}; }
  void load(const Snapshot& s) {
    map_ = s.map;
    inv_ = s.inv;
    hit_ = s.hit;
    hits_ = s.hits;
    score_ = s.score;
  }

  /// Best joint reassignment that makes one unmatched clause match; applied
  /// if it raises the score.
  bool clause_move() {
    const Snapshot start = save();
    int best = start.score;
    const MatchProblem::Candidate* best_cand = nullptr;
    for (int clause = 0; clause < static_cast<int>(hit_.size()); ++clause) {
      if (hit_[clause] >= 0) continue;
      for (const auto& cand : p_.candidates(clause)) {
        if (cand.pairs.size() < 2) continue;
        for (auto [s, g] : cand.pairs)
          if (map_[s] != g) apply(s, g);
        if (score_ > best) {
          best = score_;
          best_cand = &cand;
        }
        load(start);
      }
    }
    if (best_cand == nullptr) return false;
    for (auto [s, g] : best_cand->pairs)
      if (map_[s] != g) apply(s, g);
    return true;
  }

  void take_first_compatible(int clause, std::size_t offset) {
    const auto& cands = p_.candidates(clause);
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const auto& cand = cands[(offset + k) % cands.size()];
      const bool compatible = std::all_of(cand.pairs.begin(), cand.pairs.end(), [&](auto pr) {
        return map_[pr.first] == pr.second || (map_[pr.first] < 0 && inv_[pr.second] < 0);
      });
      if (!compatible) continue;
      for (auto [s, g] : cand.pairs)
        if (map_[s] != g) apply(s, g);
      return;
    }
  }

  void raw_move(int s, int g, int s2, int old) {
    if (old >= 0) inv_[old] = -1;
    map_[s] = g;
    inv_[g] = s;
    if (s2 >= 0 && s2 != s) {
      map_[s2] = old;
      if (old >= 0) inv_[old] = s2;
    }
  }

  int satisfied(int clause) const {
    for (const auto& cand : p_.candidates(clause)) {
      if (std::all_of(cand.pairs.begin(), cand.pairs.end(), [&](auto pr) { return map_[pr.first] == pr.second; }))
        return cand.cls;
    }
    return -1;
  }

  void remove(int cls) {
    if (cls < 0) return;
    if (hits_[cls] <= p_.class_count(cls)) --score_;
    --hits_[cls];
  }

  void add(int cls) {
    if (cls < 0) return;
    if (hits_[cls] < p_.class_count(cls)) ++score_;
    ++hits_[cls];
  }

  void rescore(int s, int s2, std::vector<std::pair<int, int>>* log) {
    ++epoch_;
    auto touch = [&](int var) {
      if (var < 0) return;
      for (int clause : p_.clauses_of(var)) {
        if (stamp_[clause] == epoch_) continue;
        stamp_[clause] = epoch_;
        const int now = satisfied(clause);
        if (now == hit_[clause]) continue;
        if (log != nullptr) log->emplace_back(clause, hit_[clause]);
        remove(hit_[clause]);
        add(now);
        hit_[clause] = now;
      }
    };
    touch(s);
    touch(s2);
  }

  const MatchProblem& p_;
  std::vector<int> map_, inv_, hit_, hits_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
  int score_ = 0;
  std::vector<std::pair<int, int>> changes_;
};

/// Raw mapping search without well-formedness gating. Both forms must have
/// consistent variable sorts.
inline MatchResult match_forms(const ClausalForm& sys, const ClausalForm& gold, const MatchConfig& config = {}) {
  const MatchProblem problem(sys, gold, config.synsets);
  MappingSearch search(problem);
  const int bound = static_cast<int>(std::min(problem.sys_total(), problem.gold_total()));
  int best = -1;
  VarMapping best_mapping;
  int used = 0;
  for (int r = 0; r < std::max(1, config.restarts); ++r) {
    ++used;
    if (r == 0) {
      search.anchor(sys);
    } else {
      std::mt19937_64 rng(detail::derive_seed(config.seed, static_cast<std::uint64_t>(r)));
      if (r % 2 == 1) search.anchor_shuffled(rng);
      else search.randomize(rng);
    }
    search.climb();
    if (search.score() > best) {
      best = search.score();
      best_mapping = search.mapping();
    }
    if (best >= bound) break;
  }
  MatchResult result = MatchResult::from_counts(static_cast<std::size_t>(best), problem.sys_total(), problem.gold_total());
  result.mapping = std::move(best_mapping);
  result.restarts_used = used;
  return result;
}

/// Hill climbing from the empty mapping; a lower bound for match_forms.
inline std::size_t greedy_from_empty(const ClausalForm& sys, const ClausalForm& gold,
                                     const SynsetTable* synsets = nullptr) {
  const MatchProblem problem(sys, gold, synsets);
  MappingSearch search(problem);
  search.climb();
  return static_cast<std::size_t>(search.score());
}

/// Scores a system DRS against a gold DRS. A system DRS that fails the
/// checker matches nothing; its clauses still count towards precision.
inline MatchResult score_pair(const ClausalForm& sys, const ClausalForm& gold, const MatchConfig& config = {}) {
  const CheckReport gold_report = check(gold);
  if (!gold_report.valid()) {
    throw InvalidGold("InvalidGold" + (gold.doc_id ? " (" + *gold.doc_id + ")" : std::string()) + ": " +
                      std::string(reason_name(*gold_report.reason)) + ": " + gold_report.message);
  }
  if (!check(sys).valid()) return MatchResult::from_counts(0, count_non_ref(sys), count_non_ref(gold));
  return match_forms(sys, gold, config);
}

struct CorpusScore {
  MatchResult total;
  std::vector<MatchResult> documents;
};

/// Micro average over documents: counts are summed before P, R and F are taken.
inline MatchResult micro_average(const std::vector<MatchResult>& docs) {
  std::size_t m = 0, s = 0, g = 0;
  for (const MatchResult& d : docs) {
    m += d.matched;
    s += d.sys_total;
    g += d.gold_total;
  }
  return MatchResult::from_counts(m, s, g);
}

inline CorpusScore score_corpus(const std::vector<ClausalForm>& sys, const std::vector<ClausalForm>& gold,
                                const MatchConfig& config = {}) {
  if (sys.size() != gold.size()) throw LengthMismatch(sys.size(), gold.size());
  CorpusScore out;
  out.documents.reserve(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) out.documents.push_back(score_pair(sys[i], gold[i], config));
  out.total = micro_average(out.documents);
  return out;
}

enum class CategoryFilter : std::uint8_t {
  AllClauses,
  DrsOperators,
  VerbNetRoles,
  WordNetSynsets,
  SynsetNouns,
  SynsetVerbal,
  OracleSenseNumbers,
  OracleSynsets,
  OracleRoles,
};

inline const std::vector<std::pair<std::string_view, CategoryFilter>>& category_names() {
  static const std::vector<std::pair<std::string_view, CategoryFilter>> names{
      {"all", CategoryFilter::AllClauses},
      {"operators", CategoryFilter::DrsOperators},
      {"roles", CategoryFilter::VerbNetRoles},
      {"synsets", CategoryFilter::WordNetSynsets},
      {"nouns", CategoryFilter::SynsetNouns},
      {"verbal", CategoryFilter::SynsetVerbal},
      {"oracle-senses", CategoryFilter::OracleSenseNumbers},
      {"oracle-synsets", CategoryFilter::OracleSynsets},
      {"oracle-roles", CategoryFilter::OracleRoles},
  };
  return names;
}

inline bool is_oracle(CategoryFilter f) {
  return f == CategoryFilter::OracleSenseNumbers || f == CategoryFilter::OracleSynsets ||
         f == CategoryFilter::OracleRoles;
}

inline bool in_category(const Clause& c, CategoryFilter filter) {
  switch (filter) {
    case CategoryFilter::DrsOperators:
      return c.kind == ClauseKind::UnaryBoxOp || c.kind == ClauseKind::BinaryBoxOp ||
             c.kind == ClauseKind::Comparison || c.kind == ClauseKind::Prp ||
             c.kind == ClauseKind::SdrsConstituent || c.kind == ClauseKind::DiscourseRelation;
    case CategoryFilter::VerbNetRoles:
      return c.kind == ClauseKind::Role;
    case CategoryFilter::WordNetSynsets:
      return c.kind == ClauseKind::Concept;
    case CategoryFilter::SynsetNouns:
      return c.kind == ClauseKind::Concept && c.pos() == 'n';
    case CategoryFilter::SynsetVerbal:
      return c.kind == ClauseKind::Concept && (c.pos() == 'v' || c.pos() == 'a' || c.pos() == 'r');
    default:
      return true;
  }
}

/// Rewrites system clauses with gold values for one facet, given a mapping.
inline ClausalForm oracle_rewrite(const ClausalForm& sys, const ClausalForm& gold, const VarMapping& mapping,
                                  CategoryFilter oracle) {
  auto image = [&](const Term& t) -> std::optional<Term> {
    if (t.is_const()) return t;
    auto it = mapping.find(t.text);
    if (it == mapping.end()) return std::nullopt;
    return Term::var(it->second);
  };
  auto box_image = [&](const std::string& box) -> std::optional<std::string> {
    auto it = mapping.find(box);
    if (it == mapping.end()) return std::nullopt;
    return it->second;
  };
  ClausalForm out = sys;
  for (Clause& c : out.clauses) {
    if (oracle == CategoryFilter::OracleRoles && c.kind == ClauseKind::Role) {
      auto a0 = image(c.args[0]);
      auto a1 = image(c.args[1]);
      if (!a0 || !a1) continue;
      const Clause* pick = nullptr;
      for (const Clause& g : gold.clauses) {
        if (g.kind != ClauseKind::Role || g.args[0] != *a0 || g.args[1] != *a1) continue;
        if (pick == nullptr || (box_image(c.box) == g.box && box_image(c.box) != pick->box)) pick = &g;
      }
      if (pick != nullptr) c.op = pick->op;
    } else if ((oracle == CategoryFilter::OracleSenseNumbers || oracle == CategoryFilter::OracleSynsets) &&
               c.kind == ClauseKind::Concept) {
      auto box = box_image(c.box);
      auto arg = image(c.args[0]);
      if (!box || !arg) continue;
      for (const Clause& g : gold.clauses) {
        if (g.kind != ClauseKind::Concept || g.box != *box || g.args[0] != *arg || g.op != c.op) continue;
        if (oracle == CategoryFilter::OracleSenseNumbers && g.pos() != c.pos()) continue;
        c.sense = g.sense;
        break;
      }
    }
  }
  return out;
}

/// Fine-grained corpus score. The mapping is searched on all clauses; counts
/// are then restricted to the filter's clauses, or taken over all clauses of
/// the oracle-rewritten system output.
inline MatchResult score_category(const std::vector<ClausalForm>& sys, const std::vector<ClausalForm>& gold,
                                  CategoryFilter filter, const MatchConfig& config = {}) {
  if (sys.size() != gold.size()) throw LengthMismatch(sys.size(), gold.size());
  std::size_t m = 0, s = 0, g = 0;
  auto keep = [filter](const Clause& c) { return in_category(c, filter); };
  auto tally = [&](const ClausalForm& form) {
    return static_cast<std::size_t>(std::count_if(form.clauses.begin(), form.clauses.end(), [&](const Clause& c) {
      return c.kind != ClauseKind::Ref && keep(c);
    }));
  };
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const MatchResult base = score_pair(sys[i], gold[i], config);
    s += tally(sys[i]);
    g += tally(gold[i]);
    if (!check(sys[i]).valid()) continue;
    if (is_oracle(filter)) {
      m += count_matches(oracle_rewrite(sys[i], gold[i], base.mapping, filter), gold[i], base.mapping, config.synsets);
    } else {
      m += count_matches(sys[i], gold[i], base.mapping, config.synsets, keep);
    }
  }
  return MatchResult::from_counts(m, s, g);
}

struct LengthBucket {
  double mean_f1 = 0.0;
  std::size_t documents = 0;
  /// Fewer than 10 documents of this length.
  bool low_support = false;
};

inline std::map<std::size_t, LengthBucket> bucket_by_length(const std::vector<MatchResult>& docs,
                                                           const std::vector<std::size_t>& lengths) {
  if (docs.size() != lengths.size()) throw LengthMismatch(docs.size(), lengths.size());
  std::map<std::size_t, LengthBucket> buckets;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    LengthBucket& b = buckets[lengths[i]];
    b.mean_f1 += docs[i].f1;
    ++b.documents;
  }
  for (auto& [length, b] : buckets) {
    b.mean_f1 /= static_cast<double>(b.documents);
    b.low_support = b.documents < 10;
  }
  return buckets;
}

inline std::map<std::size_t, LengthBucket> score_by_length(const std::vector<ClausalForm>& sys,
                                                          const std::vector<ClausalForm>& gold,
                                                          const std::vector<std::size_t>& lengths,
                                                          const MatchConfig& config = {}) {
  if (sys.size() != lengths.size()) throw LengthMismatch(sys.size(), lengths.size());
  return bucket_by_length(score_corpus(sys, gold, config).documents, lengths);
}

}  // namespace drs
