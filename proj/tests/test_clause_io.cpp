#include <catch_amalgamated.hpp>

#include "common.hpp"
#include "support/generators.hpp"

using namespace drs;
using namespace drs::testing;

TEST_CASE("role clause with a constant", "[clause]") {
  const Clause c = parse_clause("b1 Name x1 \"tom\"");
  CHECK(c.box == "b1");
  CHECK(c.kind == ClauseKind::Role);
  CHECK(c.op == "Name");
  REQUIRE(c.args.size() == 2);
  CHECK(c.args[0] == Term::var("x1"));
  CHECK(c.args[1] == Term::constant("tom"));
}

TEST_CASE("unary box operator and discourse relation", "[clause]") {
  const Clause neg = parse_clause("b0 NOT b3");
  CHECK(neg.kind == ClauseKind::UnaryBoxOp);
  CHECK(neg.args == std::vector<Term>{Term::var("b3")});

  const Clause rel = parse_clause("b0 CONTINUATION b1 b5");
  CHECK(rel.kind == ClauseKind::DiscourseRelation);
  CHECK(rel.op == "CONTINUATION");
  CHECK(rel.args == std::vector<Term>{Term::var("b1"), Term::var("b5")});
}

TEST_CASE("concept keeps lemma and sense apart", "[clause]") {
  const Clause c = parse_clause("b1 male \"n.02\" x1");
  CHECK(c.kind == ClauseKind::Concept);
  CHECK(c.op == "male");
  CHECK(c.sense == "n.02");
  CHECK(c.pos() == 'n');
  CHECK(c.args.size() == 1);
  CHECK(format_clause(c) == "b1 male \"n.02\" x1");
}

TEST_CASE("token classification", "[clause]") {
  CHECK(classify_token("TPR") == ClauseKind::Comparison);
  CHECK(classify_token("Experiencer") == ClauseKind::Role);
  CHECK(classify_token("REF") == ClauseKind::Ref);
  CHECK(classify_token("DRS") == ClauseKind::SdrsConstituent);
  CHECK(classify_token("PRP") == ClauseKind::Prp);
  CHECK(classify_token("IMP") == ClauseKind::BinaryBoxOp);
  CHECK(classify_token("NEC") == ClauseKind::UnaryBoxOp);
  CHECK(classify_token("afraid") == ClauseKind::Concept);
  CHECK_THROWS_AS(classify_token("2x"), UnclassifiableToken);
  CHECK_THROWS_AS(classify_token("aBc"), UnclassifiableToken);
  CHECK_THROWS_AS(classify_token("R2D"), UnclassifiableToken);
}

TEST_CASE("all-caps tokens outside the tables are relations", "[clause]") {
  // Oracle: a token is a relation iff it is not reserved and consists of
  // uppercase letters only.
  FormGenerator gen(7);
  for (int i = 0; i < 300; ++i) {
    std::string token;
    const int len = 1 + gen.pick(8);
    for (int k = 0; k < len; ++k) token += static_cast<char>('A' + gen.pick(26));
    const bool reserved = default_tables().is_reserved(token);
    if (reserved) continue;
    CHECK(classify_token(token) == ClauseKind::DiscourseRelation);
  }
  CHECK(classify_token("NARRATION") == ClauseKind::DiscourseRelation);
}

TEST_CASE("operator table file extends the defaults", "[clause]") {
  const OperatorTables t = parse_operator_tables(read_file(source_path("data/operators.cfg")));
  CHECK(classify_token("SXN", t) == ClauseKind::Comparison);
  CHECK(classify_token("SXN") == ClauseKind::DiscourseRelation);
  CHECK(classify_token("TPR", t) == ClauseKind::Comparison);
  CHECK(t.is_deictic("here"));
  CHECK_THROWS_AS(parse_operator_tables("[weird]\nX\n"), ConfigError);
  CHECK_THROWS_AS(parse_operator_tables("X\n"), ConfigError);
}

TEST_CASE("malformed clauses report line and column", "[io]") {
  try {
    parse_corpus("b1 REF x1\nb1 Agent x1\n");
    FAIL("expected MalformedClause");
  } catch (const MalformedClause& e) {
    CHECK(e.line_number() == 2u);
    CHECK(e.document() == 0u);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(parse_clause("b1 male n.02 x1"), MalformedClause);
  CHECK_THROWS_AS(parse_clause("b1 male \"n2\" x1"), MalformedClause);
  CHECK_THROWS_AS(parse_clause("b1 Name x1 \"tom"), MalformedClause);
  CHECK_THROWS_AS(parse_clause("b1 NOT \"b2\""), MalformedClause);
  CHECK_THROWS_AS(parse_clause("b1 FOO b2"), MalformedClause);
  CHECK_THROWS_AS(parse_clause("b1"), MalformedClause);
}

TEST_CASE("unknown part of speech is a warning", "[io]") {
  std::vector<std::string> warnings;
  const Clause c = parse_clause("b1 thing \"q.01\" x1", default_tables(), &warnings);
  CHECK(c.sense == "q.01");
  CHECK(warnings.size() == 1);
}

TEST_CASE("corpus blocks", "[io]") {
  CHECK(parse_corpus("b1 REF x1\n\n\nb2 REF x2\nb2 dog \"n.01\" x2\n").size() == 2);
  CHECK(parse_corpus("% just a comment\n\n   \n% another\n").empty());
  const auto forms = parse_corpus(fixture_text("tom_not_afraid.clf"));
  REQUIRE(forms.size() == 1);
  CHECK(forms[0].clauses.size() == 14);
  CHECK(fixture("piano_sing.clf").clauses.size() == 24);
}

TEST_CASE("comments and ids", "[io]") {
  const auto forms = parse_corpus("% id: first\nb1 REF x1 % trailing\nb1 Name x1 \"50% off\"\n\nb2 REF x2\n");
  REQUIRE(forms.size() == 2);
  CHECK(forms[0].doc_id == "first");
  CHECK(forms[0].clauses[1].args[1].text == "50% off");
  CHECK_FALSE(forms[1].doc_id.has_value());
  CHECK(serialize(forms[0]) == "% id: first\nb1 REF x1\nb1 Name x1 \"50% off\"\n");
}

TEST_CASE("serialization round trip", "[io]") {
  CHECK(serialize(fixture("tom_not_afraid.clf")) == fixture_text("tom_not_afraid.clf"));
  CHECK(serialize(fixture("piano_sing.clf")) == fixture_text("piano_sing.clf"));
  CHECK(serialize(ClausalForm{}).empty());

  const Clause spaced = parse_clause("b2 EQU t1 \"5 pm\"");
  CHECK(spaced.args[1].text == "5 pm");
  CHECK(format_clause(spaced) == "b2 EQU t1 \"5 pm\"");

  FormGenerator gen(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<ClausalForm> corpus{gen.valid_form(), gen.valid_form()};
    const std::string text = serialize_corpus(corpus);
    CHECK(parse_corpus(text) == corpus);
    CHECK(serialize_corpus(parse_corpus(text)) == text);
  }
}

TEST_CASE("quoted constants survive a round trip", "[io]") {
  // Oracle: any quote-free, newline-free constant comes back unchanged.
  FormGenerator gen(5);
  const std::string alphabet = "abc XYZ 019%-.:/é";
  for (int i = 0; i < 300; ++i) {
    std::string constant;
    const int len = gen.pick(10);
    for (int k = 0; k < len; ++k) constant += alphabet[static_cast<std::size_t>(gen.pick(static_cast<int>(alphabet.size())))];
    ClausalForm f;
    f.clauses.push_back(Clause{"b1", ClauseKind::Role, "Name", {}, {Term::var("x1"), Term::constant(constant)}});
    const ClausalForm back = parse_corpus(serialize(f)).at(0);
    CHECK(back.clauses.at(0).args.at(1).text == constant);
  }
}

TEST_CASE("syntactic well-formedness", "[io]") {
  CHECK_FALSE(is_well_formed_syntax("b1 Agent x1"));
  CHECK(is_well_formed_syntax(fixture_text("tom_not_afraid.clf")));
  ClausalForm f = fixture("tom_not_afraid.clf");
  f.clauses.push_back(parse_clause("b3 NOT b0"));
  CHECK(is_well_formed_syntax(f));
  CHECK_FALSE(check(f).valid());
  f.clauses.push_back(Clause{"b1", ClauseKind::Role, "Agent", {}, {Term::var("x1")}});
  CHECK_FALSE(is_well_formed_syntax(f));
}

TEST_CASE("lenient block parsing keeps good clauses", "[io]") {
  const auto blocks = read_blocks("b1 REF x1\nb1 Agent x1\nb1 dog \"n.01\" x1\n");
  const PartialForm p = parse_block_lenient(blocks.at(0), 0);
  CHECK(p.form.clauses.size() == 2);
  REQUIRE(p.errors.size() == 1);
  CHECK(p.errors[0].line_number() == 2u);
}
