#include <catch_amalgamated.hpp>

#include "common.hpp"
#include "support/generators.hpp"

using namespace drs;
using namespace drs::testing;

namespace {

const std::string kSp(kSpace);

std::vector<std::size_t> group_sizes(const TokenSeq& tokens) {
  std::vector<std::size_t> sizes{0};
  for (const std::string& t : tokens) {
    if (t == kSep) sizes.push_back(0);
    else ++sizes.back();
  }
  return sizes;
}

}  // namespace

TEST_CASE("char level output of a name clause", "[codec]") {
  ClausalForm f;
  f.clauses.push_back(parse_clause("b1 Name x1 \"tom\""));
  const TokenSeq expected{"b1", kSp, "Name", kSp, "x1", kSp, "\"", "t", "o", "m", "\""};
  CHECK(encode_output(f, Level::Char) == expected);
}

TEST_CASE("char level keeps operators and deictic constants atomic", "[codec]") {
  const TokenSeq seq = encode_output(form_of("b2 REF t1\nb2 EQU t1 \"now\"\nb2 time \"n.08\" t1\n"), Level::Char);
  CHECK(std::count(seq.begin(), seq.end(), "\"now\"") == 1);
  CHECK(std::count(seq.begin(), seq.end(), "EQU") == 1);
  CHECK(std::count(seq.begin(), seq.end(), "REF") == 1);
  CHECK(std::count(seq.begin(), seq.end(), "m") == 1);  // "time"
  CHECK(std::count(seq.begin(), seq.end(), std::string(kSep)) == 2);
}

TEST_CASE("word level negation fixture", "[codec]") {
  const TokenSeq seq = encode_output(fixture("tom_not_afraid.clf"), Level::Word);
  const auto sizes = group_sizes(seq);
  CHECK(sizes.size() == 14);
  for (std::size_t s : sizes) {
    CHECK(s >= 3);
    CHECK(s <= 4);
  }
  CHECK(std::find(seq.begin(), seq.end(), kSp) == seq.end());
}

TEST_CASE("output codec round trips", "[codec]") {
  for (const char* name : {"tom_not_afraid.clf", "piano_sing.clf", "tom_absolute.clf", "tom_relative.clf"}) {
    const ClausalForm f = fixture(name);
    for (Level level : {Level::Char, Level::Word}) {
      const PartialForm back = decode_output(encode_output(f, level), level);
      CHECK(back.errors.empty());
      CHECK(back.form.clauses == f.clauses);
    }
  }
  const ClausalForm spaced = form_of("b1 REF t1\nb1 EQU t1 \"5  pm \"\n");
  for (Level level : {Level::Char, Level::Word}) CHECK(decode_output(encode_output(spaced, level), level).form == spaced);
}

TEST_CASE("token lines", "[codec]") {
  const TokenSeq seq = encode_output(fixture("tom_not_afraid.clf"), Level::Char);
  CHECK(split_tokens(join_tokens(seq)) == seq);
  CHECK(split_tokens("  a  b ") == TokenSeq{"a", "b"});
}

TEST_CASE("garbled clauses are reported, not fatal", "[codec]") {
  TokenSeq seq = encode_output(fixture("tom_not_afraid.clf"), Level::Word);
  const auto agent = std::find(seq.begin(), seq.end(), "Experiencer");
  REQUIRE(agent != seq.end());
  seq.erase(agent + 1, agent + 3);  // drop both arguments
  const PartialForm p = decode_output(seq, Level::Word);
  CHECK(p.form.clauses.size() == 13);
  REQUIRE(p.errors.size() == 1);
  CHECK(p.errors[0].line_number() == 10u);

  const PartialForm empty = decode_output({}, Level::Char);
  CHECK(empty.form.clauses.empty());
  CHECK(empty.errors.empty());

  TokenSeq trailing = encode_output(fixture("tom_not_afraid.clf"), Level::Char);
  trailing.emplace_back(kSep);
  CHECK(decode_output(trailing, Level::Char).form == fixture("tom_not_afraid.clf"));
}

TEST_CASE("input encodings", "[codec]") {
  CHECK(encode_input("Tom", Level::Char, Casing::CaseFeature) == TokenSeq{"^", "t", "o", "m"});
  CHECK(encode_input("Tom", Level::Char, Casing::Lower) == TokenSeq{"t", "o", "m"});
  CHECK(encode_input("Tom", Level::Word, Casing::CaseFeature) == TokenSeq{"^", "tom"});

  const std::string sentence = "Tom isn't afraid of anything.";
  const TokenSeq chars = encode_input(sentence, Level::Char, Casing::Keep);
  CHECK(chars.size() == 29);
  CHECK(std::count(chars.begin(), chars.end(), kSp) == 4);
  CHECK(encode_input(sentence, Level::Word, Casing::Keep).size() == 5);

  const TokenSeq cw = encode_input("Tom ran", Level::CharWord, Casing::Lower);
  CHECK(cw == TokenSeq{"t", "o", "m", "tom", kSp, "r", "a", "n", "ran"});

  for (Level level : {Level::Char, Level::Word, Level::CharWord}) {
    for (Casing casing : {Casing::Keep, Casing::CaseFeature}) CHECK(decode_input(encode_input(sentence, level, casing), level, casing) == sentence);
    // Lowercasing loses information by design.
    CHECK(decode_input(encode_input(sentence, level, Casing::Lower), level, Casing::CaseFeature) == "tom isn't afraid of anything.");
  }
  CHECK(utf8_chars("né") == std::vector<std::string>{"n", "é"});
}

TEST_CASE("codecs invert on generated data", "[codec]") {
  FormGenerator gen(23);
  for (int i = 0; i < 200; ++i) {
    const ClausalForm f = gen.valid_form();
    for (NamingScheme s : {NamingScheme::Standard, NamingScheme::Absolute, NamingScheme::Relative}) {
      const ClausalForm named = rename(f, s);
      for (Level level : {Level::Char, Level::Word}) {
        const PartialForm back = decode_output(encode_output(named, level), level);
        CHECK(back.errors.empty());
        CHECK(back.form.clauses == named.clauses);
      }
    }
    const std::string raw = gen.sentence(false, false);
    CHECK(decode_input(encode_input(raw, Level::Char, Casing::Keep), Level::Char, Casing::Keep) == raw);
    CHECK(decode_input(encode_input(raw, Level::Char, Casing::CaseFeature), Level::Char, Casing::CaseFeature) == raw);
    const std::string single = gen.sentence(true, false);
    for (Level level : {Level::Word, Level::CharWord})
      CHECK(decode_input(encode_input(single, level, Casing::CaseFeature), level, Casing::CaseFeature) == single);
  }
}
