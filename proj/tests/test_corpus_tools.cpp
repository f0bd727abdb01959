#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "common.hpp"

using namespace drs;
using namespace drs::testing;

namespace {

EmbeddingStore store_of(const std::string& text) {
  std::istringstream in(text);
  return load_embeddings(in);
}

PhenomenonCounts counts_of(const ClausalForm& f) { return detect_phenomena(f); }

}  // namespace

TEST_CASE("loading embeddings", "[corpus]") {
  std::vector<std::string> warnings;
  std::istringstream in("cat 1 0\ndog 0.5 0.5\n\ncat 9 9\n");
  const EmbeddingStore s = load_embeddings(in, std::nullopt, &warnings);
  CHECK(s.dim == 2);
  CHECK(s.size() == 2);
  CHECK((*s.find("cat"))[0] == 1.0);
  CHECK(warnings.size() == 1);
  CHECK(s.find("Cat") == nullptr);

  try {
    store_of("a 1 2\nb 1 2 3\n");
    FAIL("expected DimensionMismatch");
  } catch (const DimensionMismatch& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
  std::istringstream fixed("a 1 2\n");
  CHECK_THROWS_AS(load_embeddings(fixed, 3), DimensionMismatch);
  CHECK_THROWS_AS(store_of("\n\n"), EmptyFile);
  CHECK_THROWS_AS(store_of("a 1 x\n"), InputError);
}

TEST_CASE("sentence vectors", "[corpus]") {
  EmbeddingStore s = store_of("cat 1 0\ndog 0 1\nthe 5 5\n");
  s.stopwords = parse_stopwords("# comment\nThe\n");
  CHECK(sentence_tokens("The cat, (purred).") == std::vector<std::string>{"The", "cat", "purred"});
  CHECK(sentence_vector("the cat and dog", s) == Vector{0.5, 0.5});
  CHECK(sentence_vector("the unknown", s) == Vector{0.0, 0.0});
  CHECK(cosine({1, 0}, {0, 1}) == 0.0);
  CHECK(cosine({1, 1}, {2, 2}) == Catch::Approx(1.0));
  CHECK(cosine({0, 0}, {1, 1}) == 0.0);
}

TEST_CASE("SPAR returns its default DRS", "[corpus]") {
  const ClausalForm d = parse_corpus(read_file(source_path("data/spar_default.clf"))).at(0);
  const Spar spar(d);
  CHECK(spar.parse("anything at all") == d);
  CHECK(spar.parse("") == d);
  CHECK_THROWS_AS(Spar(form_of("b1 REF x1\nb1 Agent e1 x1\n")), RequiresValidForm);
}

TEST_CASE("SIM-SPAR picks the nearest training sentence", "[corpus]") {
  const std::vector<TrainingPair> train = parse_training_pairs(
      "A cat sleeps.\nb1 REF x1\nb1 cat \"n.01\" x1\n\n"
      "A dog barks.\nb1 REF x1\nb1 dog \"n.01\" x1\n\n"
      "A dog barks.\nb1 REF x2\nb1 dog \"n.01\" x2\n");
  REQUIRE(train.size() == 3);
  CHECK(train[0].sentence == "A cat sleeps.");
  EmbeddingStore s = store_of("cat 1 0 0\nsleeps 1 0.1 0\ndog 0 1 0\nbarks 0 1 0.1\npuppy 0.1 1 0\n");
  s.stopwords = parse_stopwords("a\n");
  const SimSpar sim(train, s);
  CHECK(sim.nearest_index("A puppy") == 1);  // tie with 2, lowest index wins
  CHECK(sim.nearest_index("The cat.") == 0);
  CHECK(sim.nearest_index("zebra") == 0);
  CHECK(sim.parse("dog") == train[1].form);
  CHECK_THROWS_AS(SimSpar({}, s), EmptyTrainingSet);
  CHECK_THROWS_AS(parse_training_pairs("A cat.\nb1 Agent x1\n"), MalformedClause);
}

TEST_CASE("SIM-SPAR agrees with brute force", "[corpus]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::string vocab;
  std::vector<std::string> words;
  for (int i = 0; i < 30; ++i) {
    words.push_back("w" + std::to_string(i));
    vocab += words.back();
    for (int d = 0; d < 4; ++d) vocab += " " + std::to_string(u(rng));
    vocab += "\n";
  }
  const EmbeddingStore s = store_of(vocab);
  auto sentence = [&] {
    std::string out;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 4); k < n; ++k) out += words[rng() % words.size()] + " ";
    return out;
  };
  std::vector<TrainingPair> train;
  for (int i = 0; i < 15; ++i) train.push_back({sentence(), form_of("b1 REF x" + std::to_string(i + 1) + "\n")});
  const SimSpar sim(train, s);
  for (int q = 0; q < 100; ++q) {
    const std::string query = sentence();
    const Vector v = sentence_vector(query, s);
    double best = -2.0;
    std::size_t expect = 0;
    for (std::size_t i = 0; i < train.size(); ++i) {
      const double c = cosine(v, sentence_vector(train[i].sentence, s));
      if (c > best) best = c, expect = i;
    }
    CHECK(sim.nearest_index(query) == expect);
  }
}

TEST_CASE("phenomenon detection", "[corpus]") {
  const PhenomenonCounts f1 = counts_of(fixture("tom_not_afraid.clf"));
  CHECK(f1.at(PhenomenonKind::NegationModals) == 1);
  for (PhenomenonKind k : {PhenomenonKind::ScopeAmbiguity, PhenomenonKind::PronounResolution,
                           PhenomenonKind::DiscourseRelImp, PhenomenonKind::EmbeddedClauses})
    CHECK(f1.at(k) == 0);

  const PhenomenonCounts f2 = counts_of(fixture("piano_sing.clf"));
  CHECK(f2.at(PhenomenonKind::DiscourseRelImp) == 1);
  CHECK(f2.at(PhenomenonKind::NegationModals) == 0);

  const ClausalForm scoped = form_of(
      "b0 IMP b1 b2\nb1 REF x1\nb1 farmer \"n.01\" x1\nb2 NOT b3\nb3 REF e1\nb3 beat \"v.01\" e1\nb3 Agent e1 x1\n");
  const PhenomenonCounts sc = counts_of(scoped);
  CHECK(sc.at(PhenomenonKind::ScopeAmbiguity) == 1);
  CHECK(sc.at(PhenomenonKind::NegationModals) == 1);
  CHECK(sc.at(PhenomenonKind::DiscourseRelImp) == 1);

  const ClausalForm embedded = form_of(
      "b1 REF x1\nb1 person \"n.01\" x1\nb1 REF e1\nb1 say \"v.01\" e1\nb1 Agent e1 x1\nb1 Theme e1 p1\n"
      "b1 REF p1\nb1 PRP p1 b2\nb2 REF e2\nb2 leave \"v.01\" e2\nb2 Agent e2 x1\n");
  CHECK(counts_of(embedded).at(PhenomenonKind::EmbeddedClauses) == 1);

  CHECK_THROWS_AS(detect_phenomena(form_of("b1 Agent e1 x1\n")), RequiresValidForm);
  CHECK(phenomenon_name(PhenomenonKind::DiscourseRelImp) == "discourse_rel_imp");
  CHECK(is_approximate(PhenomenonKind::ScopeAmbiguity));
  CHECK_FALSE(is_approximate(PhenomenonKind::NegationModals));
}

TEST_CASE("phenomenon judgements", "[corpus]") {
  const ClausalForm f1 = fixture("tom_not_afraid.clf");
  CHECK(judge_phenomenon(f1, f1, PhenomenonKind::NegationModals, score_pair(f1, f1).mapping));

  // "afraid" leaves the negated box.
  ClausalForm moved = f1;
  for (Clause& c : moved.clauses)
    if (c.op == "afraid") c.box = "b0";
  moved.clauses.push_back(parse_clause("b3 REF s9"));
  moved.clauses.push_back(parse_clause("b3 thing \"n.12\" s9"));
  CHECK_FALSE(judge_phenomenon(moved, f1, PhenomenonKind::NegationModals, score_pair(moved, f1).mapping));

  const ClausalForm f2 = fixture("piano_sing.clf");
  ClausalForm no_sing = f2;
  for (Clause& c : no_sing.clauses)
    if (c.op == "sing") c.op = "dance";
  CHECK_FALSE(judge_phenomenon(no_sing, f2, PhenomenonKind::DiscourseRelImp, score_pair(no_sing, f2).mapping));
  CHECK(judge_phenomenon(f2, f2, PhenomenonKind::DiscourseRelImp, score_pair(f2, f2).mapping));

  CHECK_THROWS_AS(judge_phenomenon(f1, f1, PhenomenonKind::DiscourseRelImp, {}), PhenomenonAbsentInGold);
}

TEST_CASE("corpus statistics", "[corpus]") {
  const ClausalForm f1 = fixture("tom_not_afraid.clf"), f2 = fixture("piano_sing.clf");
  const CorpusStats s = corpus_stats({f1, f2}, {"a b c", "a b c d e"});
  CHECK(s.tokens == 8);
  CHECK(s.avg_tokens_per_sentence == 4.0);
  CHECK(s.phenomena.at(PhenomenonKind::NegationModals) == 1);
  CHECK(s.phenomena.at(PhenomenonKind::DiscourseRelImp) == 1);
  CHECK(s.skipped_invalid == 0);

  const CorpusStats empty = corpus_stats({}, {});
  CHECK(empty.documents == 0);
  CHECK(empty.avg_tokens_per_sentence == 0.0);
  CHECK(empty.phenomena.at(PhenomenonKind::ScopeAmbiguity) == 0);
  CHECK_THROWS_AS(corpus_stats({f1}, {}), LengthMismatch);

  const CorpusStats skipped = corpus_stats({form_of("b1 Agent e1 x1\n")}, {"x"});
  CHECK(skipped.skipped_invalid == 1);
}
