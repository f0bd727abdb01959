#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "common.hpp"
#include "drs_cli.hpp"
#include "support/generators.hpp"

using namespace drs;
using namespace drs::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "drs");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("drs_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::vector<TokenSeq> encode_all(const std::vector<ClausalForm>& forms, const PipelineConfig& config) {
  std::vector<TokenSeq> out;
  for (const ClausalForm& f : forms) out.push_back(encode_output(rename(f, config.scheme), config.level));
  return out;
}

}  // namespace

TEST_CASE("pipeline on perfect output", "[pipeline]") {
  FormGenerator gen(31);
  std::vector<ClausalForm> gold{fixture("tom_not_afraid.clf"), fixture("piano_sing.clf")};
  for (int i = 0; i < 8; ++i) gold.push_back(gen.valid_form());
  for (NamingScheme scheme : {NamingScheme::Standard, NamingScheme::Absolute, NamingScheme::Relative}) {
    for (Level level : {Level::Char, Level::Word}) {
      PipelineConfig config;
      config.scheme = scheme;
      config.level = level;
      const PipelineReport r = run_pipeline(encode_all(gold, config), gold, config);
      CHECK(r.total.f1 == 1.0);
      CHECK(r.ill_formed_rate() == 0.0);
    }
  }
}

TEST_CASE("pipeline flags ill-formed documents", "[pipeline]") {
  const std::vector<ClausalForm> gold{fixture("tom_not_afraid.clf"), fixture("piano_sing.clf"), fixture("tom_not_afraid.clf"), fixture("piano_sing.clf")};
  PipelineConfig config;
  std::vector<TokenSeq> sys = encode_all(gold, config);

  sys[0].resize(3);  // truncated clause
  const PipelineReport r = run_pipeline(sys, gold, config);
  CHECK(r.documents[0].status == DocStatus::Syntactic);
  CHECK(r.documents[0].score.f1 == 0.0);
  CHECK(r.syntactic == 1);
  CHECK(r.ill_formed_rate() == 0.25);
  CHECK(r.documents[1].score.f1 == 1.0);

  // A relative offset that points nowhere.
  std::vector<TokenSeq> offsets = encode_all(gold, config);
  std::replace(offsets[1].begin(), offsets[1].end(), std::string("e0"), std::string("e9"));
  CHECK(run_pipeline(offsets, gold, config).documents[1].status == DocStatus::Syntactic);

  // Well-formed tokens, but the referent is never introduced.
  ClausalForm broken = gold[0];
  std::erase(broken.clauses, parse_clause("b3 REF x2"));
  PipelineConfig standard;
  standard.scheme = NamingScheme::Standard;
  std::vector<TokenSeq> semantic = encode_all(gold, standard);
  semantic[2] = encode_output(broken, Level::Char);
  const PipelineReport s = run_pipeline(semantic, gold, standard);
  CHECK(s.documents[2].status == DocStatus::Semantic);
  CHECK(s.semantic_rate() == 0.25);

  CHECK_THROWS_AS(run_pipeline({{}}, gold, config), LengthMismatch);
  CHECK(read_token_lines("a b\n\nc\n").size() == 3);
  CHECK(read_token_lines("a b\n\nc\n")[1].empty());
}

TEST_CASE("cli check", "[cli]") {
  const Outcome ok = run_cli({"check", fixture_path("tom_not_afraid.clf")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "tom_not_afraid\tVALID\n");

  const std::string bad = temp_file("bad.clf", "% id: broken\nb1 REF x1\nb1 Agent e1 x1\n");
  const Outcome r = run_cli({"check", bad});
  CHECK(r.out.rfind("broken\tINVALID", 0) == 0);
  CHECK(r.code == 0);  // a verdict, not a failure

  const Outcome json = run_cli({"--json", "check", fixture_path("piano_sing.clf")});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j.at("schema") == 1);
}

TEST_CASE("cli score", "[cli]") {
  const Outcome self = run_cli({"score", "--sys", fixture_path("tom_not_afraid.clf"), "--gold", fixture_path("tom_not_afraid.clf")});
  CHECK(self.code == 0);
  CHECK(self.out.find("F=1.000") != std::string::npos);
  CHECK(self.out.rfind("doc\tmatched\tsys\tgold\tprecision\trecall\tf1\n", 0) == 0);

  const std::string two = temp_file("two.clf", fixture_text("tom_not_afraid.clf") + "\n" + fixture_text("piano_sing.clf"));
  const Outcome mismatch = run_cli({"score", "--sys", fixture_path("tom_not_afraid.clf"), "--gold", two});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("ength") != std::string::npos);

  const Outcome missing = run_cli({"score", "--sys", "/nonexistent/x.clf", "--gold", two});
  CHECK(missing.code == 2);

  CHECK(run_cli({"score", "--sys", two}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);

  const Outcome a = run_cli({"--seed", "4", "score", "--sys", two, "--gold", two, "--significance", two, "--rounds", "50"});
  const Outcome b = run_cli({"--seed", "4", "score", "--sys", two, "--gold", two, "--significance", two, "--rounds", "50"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli encode and pipeline", "[cli]") {
  const std::string rel = temp_file("rel.clf", run_cli({"rewrite", fixture_path("tom_not_afraid.clf"), "--scheme", "relative"}).out);
  CHECK(read_file(rel) == fixture_text("tom_relative.clf"));
  const Outcome enc = run_cli({"encode", rel, "--side", "output", "--level", "char"});
  REQUIRE(enc.code == 0);
  const std::string tokens = temp_file("tokens.txt", enc.out);
  const Outcome pipe = run_cli({"pipeline", "--sys", tokens, "--gold", fixture_path("tom_not_afraid.clf"), "--level", "char", "--scheme", "relative"});
  CHECK(pipe.code == 0);
  CHECK(pipe.out.find("tom_not_afraid\tok") != std::string::npos);

  const std::string sentences = temp_file("sent.txt", "Tom isn't afraid of anything.\n");
  const Outcome in = run_cli({"encode", sentences, "--side", "input", "--level", "word", "--casing", "feature"});
  CHECK(in.out == "^ tom isn't afraid of anything.\n");
  const std::string encoded = temp_file("sent_enc.txt", in.out);
  CHECK(run_cli({"decode", encoded, "--side", "input", "--level", "word", "--casing", "feature"}).out ==
        "Tom isn't afraid of anything.\n");
}
