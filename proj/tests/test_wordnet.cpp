#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "synant/wordnet.hpp"
#include "testutil.hpp"

using namespace synant;

namespace {

// Count of data lines (synsets) in a fixture file, header lines excluded.
int count_data_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  REQUIRE(in);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.rfind("  ", 0) == 0 || line.empty()) continue;
    ++n;
  }
  return n;
}

Vocabulary vocab_of(std::initializer_list<LemmaPos> entries) {
  Vocabulary v;
  for (const auto& e : entries) v.entries.insert(e);
  return v;
}

}  // namespace

TEST_CASE("load_wordnet parses the fixture database") {
  const LexicalDatabase& db = testutil::fixture_db();

  int expected = 0;
  for (Pos p : kAllPos) {
    expected += count_data_lines(testutil::wndb_dir() /
                                 ("data." + std::string(pos_file_suffix(p))));
  }
  int loaded = 0;
  for (Pos p : kAllPos) {
    loaded += static_cast<int>(db.synsets[static_cast<size_t>(p)].size());
  }
  CHECK(loaded == expected);

  CHECK(db.has_lemma("large", Pos::Adjective));
  CHECK(db.has_lemma("japan", Pos::Noun));       // lowercased from "Japan"
  CHECK(db.has_lemma("empire_of_japan", Pos::Noun));
  CHECK_FALSE(db.has_lemma("large", Pos::Noun));
  CHECK_FALSE(db.checksum.empty());

  // satellite synsets land in the adjective class
  const Synset* gross = db.find_synset(Pos::Adjective, 500);
  REQUIRE(gross != nullptr);
  CHECK(gross->lemmas == std::vector<std::string>{"gross"});
  // only "!" pointers are retained
  CHECK(gross->antonym_links.empty());
  const Synset* large = db.find_synset(Pos::Adjective, 100);
  REQUIRE(large != nullptr);
  CHECK(large->antonym_links.size() == 2);
  CHECK(large->antonym_links[0].source_word == 1);
  CHECK(large->antonym_links[0].target_offset == 200);
}

TEST_CASE("load_wordnet errors name the offending file") {
  testutil::TempDir tmp("wndb_missing");
  // copy everything except data.verb
  for (const auto& entry :
       std::filesystem::directory_iterator(testutil::wndb_dir())) {
    if (entry.path().filename() == "data.verb") continue;
    std::filesystem::copy_file(entry.path(),
                               tmp.path() / entry.path().filename());
  }
  CHECK_THROWS_WITH(load_wordnet(tmp.path()),
                    Catch::Matchers::ContainsSubstring("data.verb"));
}

TEST_CASE("load_wordnet reports malformed lines with file and line") {
  testutil::TempDir tmp("wndb_malformed");
  for (const auto& entry :
       std::filesystem::directory_iterator(testutil::wndb_dir())) {
    std::filesystem::copy_file(entry.path(),
                               tmp.path() / entry.path().filename());
  }
  std::ofstream app(tmp.path() / "data.adv", std::ios::app);
  app << "0000zz bad line\n";
  app.close();
  CHECK_THROWS_WITH(load_wordnet(tmp.path()),
                    Catch::Matchers::ContainsSubstring("data.adv") &&
                        Catch::Matchers::ContainsSubstring("6"));
}

TEST_CASE("build_vocabulary applies morphy per POS") {
  const LexicalDatabase& db = testutil::fixture_db();
  std::vector<RelationRecord> corpus = {testutil::make_record(
      "v1", Sense::Contrast, Explicitness::Explicit, "but", "it is cold",
      "xyzzy again")};
  Vocabulary v = build_vocabulary(corpus, db);
  CHECK(v.contains("cold", Pos::Adjective));
  CHECK(v.contains("be", Pos::Verb));
  CHECK_FALSE(v.contains("xyzzy", Pos::Noun));
  CHECK(v.size() == 2);

  CHECK(build_vocabulary({}, db).size() == 0);
}

TEST_CASE("vocabulary entries always exist in the database index") {
  const LexicalDatabase& db = testutil::fixture_db();
  auto corpus = testutil::load_corpus("corpus_small.jsonl");
  Vocabulary v = build_vocabulary(corpus, db);
  for (const auto& [lemma, pos] : v.entries) {
    CHECK(db.has_lemma(lemma, pos));
    CHECK(lemma.find('_') == std::string::npos);
  }
}

TEST_CASE("retrieve returns vocabulary-restricted synonym/antonym sets") {
  const LexicalDatabase& db = testutil::fixture_db();

  SECTION("two-sided adjective set") {
    Vocabulary v = vocab_of({{"large", Pos::Adjective},
                             {"big", Pos::Adjective},
                             {"small", Pos::Adjective},
                             {"little", Pos::Adjective}});
    SynAntResult r = retrieve("large", Pos::Adjective, v, db);
    CHECK(r.syn == std::set<std::string>{"large", "big"});
    CHECK(r.ant == std::set<std::string>{"small", "little"});
  }
  SECTION("antonyms filtered to the vocabulary") {
    Vocabulary v = vocab_of({{"profit", Pos::Noun}, {"loss", Pos::Noun}});
    SynAntResult r = retrieve("profit", Pos::Noun, v, db);
    CHECK(r.syn == std::set<std::string>{"profit"});
    CHECK(r.ant == std::set<std::string>{"loss"});
  }
  SECTION("no antonym links") {
    Vocabulary v = vocab_of({{"japan", Pos::Noun}});
    SynAntResult r = retrieve("japan", Pos::Noun, v, db);
    CHECK(r.syn == std::set<std::string>{"japan"});
    CHECK(r.ant.empty());
  }
  SECTION("query outside the vocabulary is a precondition error") {
    Vocabulary v = vocab_of({{"japan", Pos::Noun}});
    CHECK_THROWS_AS(retrieve("profit", Pos::Noun, v, db),
                    std::invalid_argument);
  }
}

TEST_CASE("retrieve invariants over the whole fixture vocabulary") {
  const LexicalDatabase& db = testutil::fixture_db();
  auto corpus = testutil::load_corpus("corpus_small.jsonl");
  Vocabulary v = build_vocabulary(corpus, db);

  for (const auto& [lemma, pos] : v.entries) {
    SynAntResult r = retrieve(lemma, pos, v, db);
    CHECK(r.syn.count(lemma) == 1);
    for (const std::string& w : r.syn) CHECK(v.contains(w, pos));
    for (const std::string& w : r.ant) {
      CHECK(v.contains(w, pos));
      CHECK(r.syn.count(w) == 0);
    }
    // determinism
    SynAntResult again = retrieve(lemma, pos, v, db);
    CHECK(again.syn == r.syn);
    CHECK(again.ant == r.ant);
  }
}

TEST_CASE("antonymy is symmetric on the fixture database") {
  const LexicalDatabase& db = testutil::fixture_db();
  auto corpus = testutil::load_corpus("corpus_small.jsonl");
  Vocabulary v = build_vocabulary(corpus, db);
  for (const auto& [lemma, pos] : v.entries) {
    SynAntResult r = retrieve(lemma, pos, v, db);
    for (const std::string& other : r.ant) {
      SynAntResult back = retrieve(other, pos, v, db);
      CHECK(back.ant.count(lemma) == 1);
    }
  }
}

namespace {

// Minimal database with a polysemous noun: "bank" sits in two synsets.
void write_polysemy_db(const std::filesystem::path& dir) {
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(dir / name);
    out << body;
  };
  write("index.noun",
        "  1 header\n"
        "bank n 2 1 ! 2 1 00000001 00000002\n"
        "crash n 1 1 ! 1 0 00000003\n"
        "firm n 1 0 1 0 00000002\n"
        "shore n 1 0 1 0 00000001\n"
        "worda n 1 0 1 0 00000004\n"
        "wordb n 1 0 1 0 00000004\n"
        "wordc n 1 0 1 0 00000004\n"
        "wordd n 1 0 1 0 00000004\n"
        "worde n 1 0 1 0 00000004\n"
        "wordf n 1 0 1 0 00000004\n"
        "wordg n 1 0 1 0 00000004\n"
        "wordh n 1 0 1 0 00000004\n"
        "wordi n 1 0 1 0 00000004\n"
        "wordj n 1 0 1 0 00000004\n");
  write("data.noun",
        "  1 header\n"
        "00000001 03 n 02 bank 0 shore 0 000 | sloping land\n"
        "00000002 03 n 02 bank 0 firm 0 001 ! 00000003 n 0101 | financial institution\n"
        "00000003 03 n 01 crash 0 001 ! 00000002 n 0101 | collapse\n"
        "00000004 03 n 0a worda 0 wordb 0 wordc 0 wordd 0 worde 0 wordf 0 "
        "wordg 0 wordh 0 wordi 0 wordj 0 000 | ten members\n");
  for (const char* name : {"index.verb", "index.adj", "index.adv",
                           "data.verb", "data.adj", "data.adv"}) {
    write(name, "  1 header\n");
  }
  for (const char* name : {"noun.exc", "verb.exc", "adj.exc", "adv.exc"}) {
    write(name, "");
  }
}

}  // namespace

TEST_CASE("retrieve unions over all senses of a polysemous lemma") {
  testutil::TempDir tmp("wndb_polysemy");
  write_polysemy_db(tmp.path());
  LexicalDatabase db = load_wordnet(tmp.path());

  Vocabulary v;
  for (const char* w : {"bank", "shore", "firm", "crash"}) {
    v.entries.insert(LemmaPos{w, Pos::Noun});
  }
  SynAntResult r = retrieve("bank", Pos::Noun, v, db);
  CHECK(r.syn == std::set<std::string>{"bank", "shore", "firm"});
  CHECK(r.ant == std::set<std::string>{"crash"});

  // the antonym of either sense opposes the union
  SynAntResult back = retrieve("crash", Pos::Noun, v, db);
  CHECK(back.ant == std::set<std::string>{"bank", "firm"});
}

TEST_CASE("data lines with hexadecimal word counts parse fully") {
  testutil::TempDir tmp("wndb_hex");
  write_polysemy_db(tmp.path());
  LexicalDatabase db = load_wordnet(tmp.path());
  const Synset* ten = db.find_synset(Pos::Noun, 4);
  REQUIRE(ten != nullptr);
  CHECK(ten->lemmas.size() == 10);  // w_cnt "0a"
  CHECK(db.has_lemma("wordj", Pos::Noun));
}

TEST_CASE("parser rejects specific malformed shapes") {
  testutil::TempDir tmp("wndb_badlines");
  auto parse_one = [&](const std::string& name, const std::string& body,
                       auto parser) {
    std::ofstream out(tmp.path() / name);
    out << body;
    out.close();
    LexicalDatabase db;
    parser(tmp.path() / name, Pos::Noun, db);
  };

  SECTION("index offset list shorter than synset_cnt") {
    CHECK_THROWS_WITH(
        parse_one("index.noun", "dog n 3 0 3 0 00000001\n",
                  [](auto f, auto p, auto& db) {
                    synant::detail::parse_index_file(f, p, db);
                  }),
        Catch::Matchers::ContainsSubstring("offset list"));
  }
  SECTION("data line with a foreign ss_type") {
    CHECK_THROWS_WITH(
        parse_one("data.noun", "00000001 03 v 01 dog 0 000 | gloss\n",
                  [](auto f, auto p, auto& db) {
                    synant::detail::parse_data_file(f, p, db);
                  }),
        Catch::Matchers::ContainsSubstring("ss_type"));
  }
  SECTION("antonym pointer with a malformed source/target field") {
    CHECK_THROWS_WITH(
        parse_one("data.noun",
                  "00000001 03 n 01 dog 0 001 ! 00000002 n 01 | gloss\n",
                  [](auto f, auto p, auto& db) {
                    synant::detail::parse_data_file(f, p, db);
                  }),
        Catch::Matchers::ContainsSubstring("source/target"));
  }
  SECTION("truncated pointer list") {
    CHECK_THROWS_WITH(
        parse_one("data.noun", "00000001 03 n 01 dog 0 002 ! 00000002 n 0101\n",
                  [](auto f, auto p, auto& db) {
                    synant::detail::parse_data_file(f, p, db);
                  }),
        Catch::Matchers::ContainsSubstring("pointer"));
  }
  SECTION("one-token exception line") {
    CHECK_THROWS_WITH(
        parse_one("noun.exc", "orphan\n",
                  [](auto f, auto p, auto& db) {
                    synant::detail::parse_exception_file(f, p, db);
                  }),
        Catch::Matchers::ContainsSubstring("exception"));
  }
}
