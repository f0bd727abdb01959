#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage, 2 bad input,
// 3 internal error. Data goes to `out` (or --out), diagnostics to `err`.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drs/drs.hpp"

namespace drs::cli {

using json = nlohmann::ordered_json;

inline std::string fixed(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

struct Globals {
  std::uint64_t seed = 1;
  std::string ops_table;
  bool quiet = false;
  bool as_json = false;
  std::string out_path;
};

struct Doc {
  std::string id;
  PartialForm parsed;
};

inline std::string doc_id(const std::string& path, std::size_t index, std::size_t count,
                          const std::optional<std::string>& explicit_id) {
  if (explicit_id) return *explicit_id;
  const std::string stem = std::filesystem::path(path).stem().string();
  return count == 1 ? stem : stem + "." + std::to_string(index + 1);
}

/// Reads every block leniently; clause errors stay attached to their document.
inline std::vector<Doc> read_docs(const std::string& path, const OperatorTables& tables) {
  const std::vector<Block> blocks = read_blocks(read_file(path));
  std::vector<Doc> docs;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    docs.push_back({doc_id(path, i, blocks.size(), blocks[i].doc_id), parse_block_lenient(blocks[i], i, tables)});
  }
  return docs;
}

inline std::vector<ClausalForm> read_strict(const std::string& path, const OperatorTables& tables) {
  return parse_corpus(read_file(path), tables);
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

template <typename Enum>
std::map<std::string, Enum> enum_map(std::initializer_list<std::pair<const std::string, Enum>> items) {
  return std::map<std::string, Enum>(items);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(&out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"DRS clausal form toolkit: check, score, rewrite, encode and decode"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g_.seed, "Random seed")->capture_default_str();
    app.add_option("--ops-table", g_.ops_table, "Extra operator tokens (sections [unary] [binary] [comparison] [deictic])");
    app.add_flag("--quiet", g_.quiet, "No summaries on stderr");
    app.add_flag("--json", g_.as_json, "JSON output");
    app.add_option("--out", g_.out_path, "Write data here instead of stdout");

    add_check(app);
    add_score(app);
    add_rewrite(app);
    add_encode(app);
    add_decode(app);
    add_baseline(app);
    add_phenomena(app);
    add_stats(app);
    add_pipeline(app);

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, *out_, err_);
      return code == 0 ? 0 : 1;
    }
    try {
      for (const std::string* path : {&g_.ops_table, &sys_path_, &gold_path_, &in_path_, &synset_path_, &lengths_path_,
                                      &other_path_, &default_path_, &train_path_, &emb_path_, &stop_path_, &sentences_path_}) {
        if (!path->empty() && !std::filesystem::is_regular_file(*path)) throw InputError("no such file '" + *path + "'");
      }
      for (const std::string& path : check_files_)
        if (!std::filesystem::is_regular_file(path)) throw InputError("no such file '" + path + "'");
      tables_ = g_.ops_table.empty() ? default_tables() : parse_operator_tables(read_file(g_.ops_table));
      std::ofstream file;
      if (!g_.out_path.empty()) {
        file.open(g_.out_path, std::ios::binary);
        if (!file) throw InputError("cannot write '" + g_.out_path + "'");
        out_ = &file;
      }
      for (auto& [sub, action] : actions_) {
        if (sub->parsed()) action();
      }
      out_->flush();
      return 0;
    } catch (const InputError& e) {
      err_ << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << "\n";
      return 3;
    }
  }

 private:
  std::ostream& out() { return *out_; }

  void note(const std::string& line) {
    if (!g_.quiet) err_ << line << "\n";
  }

  MatchConfig match_config() const {
    MatchConfig c;
    c.restarts = restarts_;
    c.seed = g_.seed;
    c.synsets = synsets_ ? &*synsets_ : nullptr;
    return c;
  }

  void load_synsets() {
    if (!synset_path_.empty()) synsets_ = SynsetTable::parse(read_file(synset_path_));
  }

  void add_check(CLI::App& app) {
    auto* sub = app.add_subcommand("check", "Validate clausal forms");
    sub->add_option("files", check_files_, "Clause files")->required();
    actions_.emplace_back(sub, [this] {
      json rows = json::array();
      std::size_t total = 0, valid = 0;
      for (const std::string& path : check_files_) {
        for (const Doc& d : read_docs(path, tables_)) {
          ++total;
          CheckReport report;
          if (!d.parsed.errors.empty()) {
            report.reason = Reason::SyntaxError;
            report.message = d.parsed.errors.front().what();
          } else {
            report = check(d.parsed.form);
          }
          if (report.valid()) ++valid;
          if (g_.as_json) {
            json row{{"id", d.id}, {"valid", report.valid()}};
            if (!report.valid()) {
              row["reason"] = reason_name(*report.reason);
              row["message"] = report.message;
              row["witnesses"] = report.witnesses;
            } else {
              row["main_box"] = *report.main_box;
            }
            row["warnings"] = report.warnings;
            rows.push_back(row);
          } else if (report.valid()) {
            out() << d.id << "\tVALID\n";
          } else {
            out() << d.id << "\tINVALID\t" << reason_name(*report.reason) << "\n";
            note(d.id + ": " + report.message);
          }
        }
      }
      if (g_.as_json) out() << json{{"schema", 1}, {"documents", rows}}.dump(2) << "\n";
      note(std::to_string(valid) + "/" + std::to_string(total) + " valid");
    });
  }

  /// System output: unparsable documents are kept as ill-formed.
  std::vector<ClausalForm> read_system(const std::string& path, std::vector<std::string>* ids = nullptr) {
    std::vector<ClausalForm> forms;
    for (Doc& d : read_docs(path, tables_)) {
      if (!d.parsed.errors.empty()) {
        note(d.id + ": " + d.parsed.errors.front().what());
        // An unparsable clause makes the document ill-formed; keep what parsed
        // for the precision count and force a failing check.
        d.parsed.form.clauses.push_back(Clause{"?", ClauseKind::Ref, "REF", {}, {}});
      }
      if (ids != nullptr) ids->push_back(d.id);
      forms.push_back(std::move(d.parsed.form));
    }
    return forms;
  }

  void add_score(CLI::App& app) {
    auto* sub = app.add_subcommand("score", "Clause-matching F-score of system output against gold");
    sub->add_option("--sys", sys_path_, "System clause file")->required();
    sub->add_option("--gold", gold_path_, "Gold clause file")->required();
    sub->add_option("--restarts", restarts_, "Hill-climbing restarts")->capture_default_str();
    sub->add_option("--synsets", synset_path_, "Synset table (lemma.p.nn<TAB>id)");
    std::map<std::string, CategoryFilter> categories;
    for (auto [name, f] : category_names()) categories.emplace(std::string(name), f);
    sub->add_option("--category", category_, "Clause category")->transform(CLI::CheckedTransformer(categories));
    sub->add_option("--by-length", lengths_path_, "Sentence lengths, one per document");
    sub->add_option("--significance", other_path_, "Second system for a randomization test");
    sub->add_option("--rounds", rounds_, "Randomization rounds")->capture_default_str();
    actions_.emplace_back(sub, [this] { score(); });
  }

  void score() {
    load_synsets();
    std::vector<std::string> ids;
    const std::vector<ClausalForm> sys = read_system(sys_path_, &ids);
    const std::vector<ClausalForm> gold = read_strict(gold_path_, tables_);
    const MatchConfig config = match_config();
    const CorpusScore result = score_corpus(sys, gold, config);
    json summary{{"schema", 1}};
    if (!g_.as_json) out() << "doc\tmatched\tsys\tgold\tprecision\trecall\tf1\n";
    json docs = json::array();
    for (std::size_t i = 0; i < result.documents.size(); ++i) {
      const MatchResult& r = result.documents[i];
      if (g_.as_json) {
        docs.push_back({{"id", ids[i]}, {"matched", r.matched}, {"sys", r.sys_total}, {"gold", r.gold_total},
                        {"precision", r.precision}, {"recall", r.recall}, {"f1", r.f1}});
      } else {
        out() << ids[i] << '\t' << r.matched << '\t' << r.sys_total << '\t' << r.gold_total << '\t'
              << fixed(r.precision, 4) << '\t' << fixed(r.recall, 4) << '\t' << fixed(r.f1, 4) << '\n';
      }
    }
    const MatchResult& t = result.total;
    summary["documents"] = docs;
    summary["matched"] = t.matched;
    summary["sys"] = t.sys_total;
    summary["gold"] = t.gold_total;
    summary["precision"] = t.precision;
    summary["recall"] = t.recall;
    summary["f1"] = t.f1;
    if (!g_.as_json) out() << "# P=" << fixed(t.precision) << " R=" << fixed(t.recall) << " F=" << fixed(t.f1) << "\n";

    if (category_ != CategoryFilter::AllClauses) {
      const MatchResult c = score_category(sys, gold, category_, config);
      std::string name;
      for (auto [n, f] : category_names())
        if (f == category_) name = n;
      summary["category"] = {{"name", name}, {"precision", c.precision}, {"recall", c.recall}, {"f1", c.f1}};
      if (!g_.as_json)
        out() << "# category=" << name << " P=" << fixed(c.precision) << " R=" << fixed(c.recall) << " F=" << fixed(c.f1)
              << "\n";
    }
    if (!lengths_path_.empty()) {
      std::vector<std::size_t> lengths;
      for (const std::string& line : read_lines(lengths_path_)) {
        if (trim(line).empty()) continue;
        try {
          lengths.push_back(std::stoul(std::string(trim(line))));
        } catch (const std::exception&) {
          throw InputError("bad length '" + line + "' in " + lengths_path_);
        }
      }
      json buckets = json::array();
      for (const auto& [len, b] : bucket_by_length(result.documents, lengths)) {
        buckets.push_back({{"length", len}, {"documents", b.documents}, {"mean_f1", b.mean_f1}, {"low_support", b.low_support}});
        if (!g_.as_json)
          out() << "# length=" << len << " docs=" << b.documents << " F=" << fixed(b.mean_f1)
                << (b.low_support ? " low-support" : "") << "\n";
      }
      summary["by_length"] = buckets;
    }
    if (!other_path_.empty()) {
      const CorpusScore other = score_corpus(read_system(other_path_), gold, config);
      const SignificanceResult s = approximate_randomization(result.documents, other.documents, rounds_, g_.seed);
      summary["significance"] = {{"other_f1", other.total.f1}, {"observed", s.observed}, {"p", s.p_value}, {"rounds", s.rounds}};
      if (!g_.as_json)
        out() << "# other F=" << fixed(other.total.f1) << " |diff|=" << fixed(s.observed, 4) << " p=" << fixed(s.p_value, 4)
              << " rounds=" << s.rounds << "\n";
    }
    if (g_.as_json) out() << summary.dump(2) << "\n";
  }

  void add_rewrite(CLI::App& app) {
    auto* sub = app.add_subcommand("rewrite", "Rename variables (absolute, relative) or restore standard names");
    sub->add_option("file", in_path_, "Clause file")->required();
    sub->add_option("--scheme", scheme_, "Naming scheme")
        ->transform(CLI::CheckedTransformer(enum_map<NamingScheme>(
            {{"standard", NamingScheme::Standard}, {"absolute", NamingScheme::Absolute}, {"relative", NamingScheme::Relative}})));
    sub->add_flag("--restore", restore_, "Input uses --scheme names; write standard names");
    actions_.emplace_back(sub, [this] {
      std::vector<ClausalForm> forms = read_strict(in_path_, tables_);
      for (ClausalForm& f : forms) f = restore_ ? restore(f, scheme_) : rename(f, scheme_);
      out() << serialize_corpus(forms);
    });
  }

  void add_codec_options(CLI::App* sub) {
    sub->add_option("file", in_path_, "Input file")->required();
    sub->add_option("--side", side_, "input (sentences) or output (clauses)")->check(CLI::IsMember({"input", "output"}));
    sub->add_option("--level", level_, "Token level")
        ->transform(CLI::CheckedTransformer(
            enum_map<Level>({{"char", Level::Char}, {"word", Level::Word}, {"charword", Level::CharWord}})));
    sub->add_option("--casing", casing_, "Input casing")
        ->transform(CLI::CheckedTransformer(
            enum_map<Casing>({{"keep", Casing::Keep}, {"lower", Casing::Lower}, {"feature", Casing::CaseFeature}})));
  }

  void add_encode(CLI::App& app) {
    auto* sub = app.add_subcommand("encode", "Clauses or sentences to token streams, one sequence per line");
    add_codec_options(sub);
    actions_.emplace_back(sub, [this] {
      if (side_ == "input") {
        for (const std::string& s : read_lines(in_path_)) out() << join_tokens(encode_input(s, level_, casing_)) << "\n";
        return;
      }
      if (level_ == Level::CharWord) throw ConfigError("charword is an input-side level");
      for (const ClausalForm& f : read_strict(in_path_, tables_))
        out() << join_tokens(encode_output(f, level_, tables_)) << "\n";
    });
  }

  void add_decode(CLI::App& app) {
    auto* sub = app.add_subcommand("decode", "Token streams back to clauses or sentences");
    add_codec_options(sub);
    actions_.emplace_back(sub, [this] {
      const std::string text = read_file(in_path_);
      if (side_ == "input") {
        for (const TokenSeq& t : read_token_lines(text)) out() << decode_input(t, level_, casing_) << "\n";
        return;
      }
      if (level_ == Level::CharWord) throw ConfigError("charword is an input-side level");
      std::vector<ClausalForm> forms;
      std::size_t errors = 0;
      const std::vector<TokenSeq> lines = read_token_lines(text);
      for (std::size_t i = 0; i < lines.size(); ++i) {
        PartialForm p = decode_output(lines[i], level_, tables_);
        for (const MalformedClause& e : p.errors) {
          ++errors;
          note("sequence " + std::to_string(i + 1) + ", clause " + std::to_string(*e.line_number()) + ": " + e.message());
        }
        forms.push_back(std::move(p.form));
      }
      out() << serialize_corpus(forms);
      note(std::to_string(forms.size()) + " sequences, " + std::to_string(errors) + " clause error(s)");
    });
  }

  void add_baseline(CLI::App& app) {
    auto* sub = app.add_subcommand("baseline", "SPAR / SIM-SPAR baseline parses for a sentence file");
    sub->add_option("--kind", kind_, "spar or simspar")->required()->check(CLI::IsMember({"spar", "simspar"}));
    sub->add_option("--sentences", in_path_, "Sentences, one per line")->required();
    sub->add_option("--default", default_path_, "Default DRS for spar");
    sub->add_option("--train", train_path_, "Training pairs for simspar");
    sub->add_option("--emb", emb_path_, "Word vectors (GloVe text format)");
    sub->add_option("--stopwords", stop_path_, "Stopword list");
    sub->add_option("--dim", dim_, "Expected vector dimension");
    sub->add_flag("--lowercase", lowercase_, "Lowercase words before lookup");
    actions_.emplace_back(sub, [this] {
      std::vector<std::string> sentences;
      for (const std::string& s : read_lines(in_path_))
        if (!trim(s).empty()) sentences.push_back(s);
      std::vector<ClausalForm> forms;
      if (kind_ == "spar") {
        if (default_path_.empty()) throw ConfigError("spar needs --default");
        const auto defaults = read_strict(default_path_, tables_);
        if (defaults.size() != 1) throw ConfigError("--default must hold exactly one DRS");
        const Spar spar(defaults.front());
        for (const std::string& s : sentences) forms.push_back(spar.parse(s));
      } else {
        if (train_path_.empty() || emb_path_.empty()) throw ConfigError("simspar needs --train and --emb");
        std::vector<std::string> warnings;
        EmbeddingStore store = load_embeddings(emb_path_, dim_ ? std::optional<std::size_t>(dim_) : std::nullopt, &warnings);
        for (const std::string& w : warnings) note(w);
        store.lowercase = lowercase_;
        if (!stop_path_.empty()) store.stopwords = parse_stopwords(read_file(stop_path_));
        const SimSpar sim(parse_training_pairs(read_file(train_path_), tables_), std::move(store));
        for (const std::string& s : sentences) forms.push_back(sim.parse(s));
      }
      for (ClausalForm& f : forms) f.doc_id.reset();
      out() << serialize_corpus(forms);
    });
  }

  void add_phenomena(CLI::App& app) {
    auto* sub = app.add_subcommand("phenomena", "Count phenomena in gold and judge whether the system captures them");
    sub->add_option("--sys", sys_path_, "System clause file");
    sub->add_option("--gold", gold_path_, "Gold clause file")->required();
    sub->add_option("--restarts", restarts_, "Hill-climbing restarts")->capture_default_str();
    actions_.emplace_back(sub, [this] {
      std::vector<std::string> ids;
      for (const Doc& d : read_docs(gold_path_, tables_)) ids.push_back(d.id);
      const std::vector<ClausalForm> gold = read_strict(gold_path_, tables_);
      std::vector<ClausalForm> sys;
      if (!sys_path_.empty()) {
        sys = read_system(sys_path_);
        if (sys.size() != gold.size()) throw LengthMismatch(sys.size(), gold.size());
      }
      std::map<PhenomenonKind, std::pair<std::size_t, std::size_t>> totals;  // documents with it, captured
      json rows = json::array();
      if (!g_.as_json) out() << (sys.empty() ? "doc\tphenomenon\tcount\n" : "doc\tphenomenon\tcount\tcaptured\n");
      for (std::size_t i = 0; i < gold.size(); ++i) {
        const PhenomenonCounts counts = detect_phenomena(gold[i]);
        std::optional<MatchResult> match;
        if (!sys.empty()) match = score_pair(sys[i], gold[i], match_config());
        for (auto [kind, n] : counts) {
          if (n == 0) continue;
          ++totals[kind].first;
          json row{{"id", ids[i]}, {"phenomenon", phenomenon_name(kind)}, {"count", n}};
          std::string captured;
          if (match) {
            const bool ok = check(sys[i]).valid() && judge_phenomenon(sys[i], gold[i], kind, match->mapping);
            if (ok) ++totals[kind].second;
            row["captured"] = ok;
            captured = ok ? "\tyes" : "\tno";
          }
          if (g_.as_json) rows.push_back(row);
          else out() << ids[i] << '\t' << phenomenon_name(kind) << '\t' << n << captured << '\n';
        }
      }
      json summary = json::object();
      for (PhenomenonKind k : kAllPhenomena) {
        const auto [present, captured] = totals[k];
        json entry{{"documents", present}, {"approximate", is_approximate(k)}};
        std::string line = std::string("# ") + std::string(phenomenon_name(k)) + " documents=" + std::to_string(present);
        if (!sys.empty()) {
          entry["captured"] = captured;
          line += " captured=" + std::to_string(captured);
        }
        if (is_approximate(k)) line += " (approximate)";
        summary[std::string(phenomenon_name(k))] = entry;
        if (!g_.as_json) out() << line << "\n";
      }
      if (g_.as_json) out() << json{{"schema", 1}, {"documents", rows}, {"summary", summary}}.dump(2) << "\n";
    });
  }

  void add_stats(CLI::App& app) {
    auto* sub = app.add_subcommand("stats", "Corpus statistics");
    sub->add_option("clauses", in_path_, "Clause file")->required();
    sub->add_option("sentences", sentences_path_, "Tokenized sentences, one per line")->required();
    actions_.emplace_back(sub, [this] {
      std::vector<std::string> sentences;
      for (const std::string& s : read_lines(sentences_path_))
        if (!trim(s).empty()) sentences.push_back(s);
      const CorpusStats s = corpus_stats(read_strict(in_path_, tables_), sentences);
      if (g_.as_json) {
        json ph = json::object();
        for (auto [k, n] : s.phenomena) ph[std::string(phenomenon_name(k))] = {{"count", n}, {"approximate", is_approximate(k)}};
        out() << json{{"schema", 1},          {"documents", s.documents},
                      {"sentences", s.sentences}, {"tokens", s.tokens},
                      {"avg_tokens_per_sentence", s.avg_tokens_per_sentence},
                      {"skipped_invalid", s.skipped_invalid}, {"phenomena", ph}}
                     .dump(2)
              << "\n";
        return;
      }
      out() << "documents\t" << s.documents << "\nsentences\t" << s.sentences << "\ntokens\t" << s.tokens
            << "\navg_tokens_per_sentence\t" << fixed(s.avg_tokens_per_sentence, 2) << "\nskipped_invalid\t"
            << s.skipped_invalid << "\n";
      for (auto [k, n] : s.phenomena) out() << phenomenon_name(k) << '\t' << n << (is_approximate(k) ? "\t~" : "") << '\n';
    });
  }

  void add_pipeline(CLI::App& app) {
    auto* sub = app.add_subcommand("pipeline", "Score raw token-stream output: decode, restore names, check, score");
    sub->add_option("--sys", sys_path_, "Token streams, one document per line")->required();
    sub->add_option("--gold", gold_path_, "Gold clause file")->required();
    sub->add_option("--level", level_, "Token level")
        ->transform(CLI::CheckedTransformer(enum_map<Level>({{"char", Level::Char}, {"word", Level::Word}})));
    sub->add_option("--scheme", scheme_, "Naming scheme of the system output")
        ->transform(CLI::CheckedTransformer(enum_map<NamingScheme>(
            {{"standard", NamingScheme::Standard}, {"absolute", NamingScheme::Absolute}, {"relative", NamingScheme::Relative}})));
    sub->add_option("--restarts", restarts_, "Hill-climbing restarts")->capture_default_str();
    sub->add_option("--synsets", synset_path_, "Synset table");
    actions_.emplace_back(sub, [this] {
      load_synsets();
      std::vector<std::string> ids;
      for (const Doc& d : read_docs(gold_path_, tables_)) ids.push_back(d.id);
      PipelineConfig config;
      config.level = level_;
      config.scheme = scheme_;
      config.match = match_config();
      config.tables = &tables_;
      const PipelineReport r = run_pipeline(read_token_lines(read_file(sys_path_)), read_strict(gold_path_, tables_), config);
      json docs = json::array();
      if (!g_.as_json) out() << "doc\tstatus\tmatched\tsys\tgold\tf1\n";
      for (std::size_t i = 0; i < r.documents.size(); ++i) {
        const PipelineDoc& d = r.documents[i];
        if (g_.as_json) {
          docs.push_back({{"id", ids[i]}, {"status", status_name(d.status)}, {"matched", d.score.matched},
                          {"sys", d.score.sys_total}, {"gold", d.score.gold_total}, {"f1", d.score.f1}, {"detail", d.detail}});
        } else {
          out() << ids[i] << '\t' << status_name(d.status) << '\t' << d.score.matched << '\t' << d.score.sys_total << '\t'
                << d.score.gold_total << '\t' << fixed(d.score.f1, 4) << '\n';
          if (d.status != DocStatus::Ok) note(ids[i] + ": " + d.detail);
        }
      }
      if (g_.as_json) {
        out() << json{{"schema", 1},
                      {"documents", docs},
                      {"precision", r.total.precision},
                      {"recall", r.total.recall},
                      {"f1", r.total.f1},
                      {"ill_formed", r.ill_formed_rate()},
                      {"ill_formed_syntactic", r.syntactic_rate()},
                      {"ill_formed_semantic", r.semantic_rate()}}
                     .dump(2)
              << "\n";
      } else {
        out() << "# P=" << fixed(r.total.precision) << " R=" << fixed(r.total.recall) << " F=" << fixed(r.total.f1)
              << " ill=" << fixed(r.ill_formed_rate()) << " syntactic=" << fixed(r.syntactic_rate())
              << " semantic=" << fixed(r.semantic_rate()) << "\n";
      }
    });
  }

  std::ostream* out_;
  std::ostream& err_;
  Globals g_;
  OperatorTables tables_;
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions_;

  std::vector<std::string> check_files_;
  std::string sys_path_, gold_path_, in_path_, synset_path_, lengths_path_, other_path_;
  std::string default_path_, train_path_, emb_path_, stop_path_, sentences_path_;
  std::string side_ = "output";
  std::string kind_;
  int restarts_ = 20;
  std::size_t rounds_ = 1000;
  std::size_t dim_ = 0;
  bool lowercase_ = false;
  bool restore_ = false;
  std::optional<SynsetTable> synsets_;
  CategoryFilter category_ = CategoryFilter::AllClauses;
  NamingScheme scheme_ = NamingScheme::Standard;
  Level level_ = Level::Char;
  Casing casing_ = Casing::Keep;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Runner runner(out, err);
  return runner.run(argc, argv);
}

}  // namespace drs::cli
