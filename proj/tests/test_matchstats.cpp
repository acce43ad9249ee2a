#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "synant/matchstats.hpp"
#include "synant/svg.hpp"
#include "testutil.hpp"

using namespace synant;

namespace {

ArgumentVector dense(std::vector<int> values) {
  ArgumentVector v;
  v.dimension = static_cast<int>(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) v.coords[static_cast<int>(i) + 1] = values[i];
  }
  return v;
}

}  // namespace

TEST_CASE("match_counts follows the element-wise product") {
  SECTION("worked example") {
    MatchCounts mc = match_counts(dense({-2, 0, 1, 0}), dense({1, -1, 1, 0}));
    CHECK(mc.n_syn == 1);
    CHECK(mc.n_ant == 1);
  }
  SECTION("zero vector matches nothing") {
    MatchCounts mc = match_counts(dense({3, -1, 2}), dense({0, 0, 0}));
    CHECK(mc == MatchCounts{0, 0});
  }
  SECTION("equal vectors only produce synonym matches") {
    MatchCounts mc = match_counts(dense({3, -1}), dense({3, -1}));
    CHECK(mc == MatchCounts{2, 0});
  }
  SECTION("dimension mismatch is an error") {
    CHECK_THROWS_AS(match_counts(dense({1}), dense({1, 2})),
                    std::invalid_argument);
  }
}

TEST_CASE("match_counts properties") {
  std::mt19937_64 gen(123);
  auto random_vec = [&](int dim) {
    ArgumentVector v;
    v.dimension = dim;
    for (int i = 1; i <= dim; ++i) {
      int r = static_cast<int>(gen() % 7) - 3;  // -3..3, zero kept sparse
      if (r != 0 && gen() % 2 == 0) v.coords[i] = r;
    }
    return v;
  };

  for (int trial = 0; trial < 200; ++trial) {
    int dim = 1 + static_cast<int>(gen() % 30);
    ArgumentVector a = random_vec(dim);
    ArgumentVector b = random_vec(dim);

    // symmetry
    CHECK(match_counts(a, b) == match_counts(b, a));
    // negating one side swaps the counts
    ArgumentVector neg = a;
    for (auto& [k, val] : neg.coords) val = -val;
    MatchCounts mc = match_counts(a, b);
    MatchCounts swapped = match_counts(neg, b);
    CHECK(swapped.n_syn == mc.n_ant);
    CHECK(swapped.n_ant == mc.n_syn);
    // bound
    CHECK(mc.n_syn + mc.n_ant <= dim);
  }
}

TEST_CASE("match_counts commutes with projection") {
  const LexicalDatabase& db = testutil::fixture_db();
  auto corpus = testutil::load_corpus("corpus_small.jsonl");
  Lexicon lex = build_lexicon(corpus, db);

  RepresentedCorpus all =
      represent_corpus(corpus, lex, db, ablation_mask(lex, MaskKind::All));
  for (MaskKind kind : kAllMasks) {
    AblationMask mask = ablation_mask(lex, kind);
    RepresentedCorpus masked = represent_corpus(corpus, lex, db, mask);
    for (size_t i = 0; i < corpus.size(); ++i) {
      MatchCounts via_projection = match_counts(
          project(all.relations[i].r1, mask), project(all.relations[i].r2, mask));
      MatchCounts direct =
          match_counts(masked.relations[i].r1, masked.relations[i].r2);
      CHECK(via_projection == direct);
    }
  }
}

TEST_CASE("heatmap counts proportions per cell") {
  std::vector<MatchCounts> group = {{1, 1}, {1, 1}, {0, 0}, {2, 0}};
  HeatmapGrid grid = heatmap(group, "g");
  CHECK(grid.total == 4);
  CHECK(grid.proportions.at({1, 1}) == 0.5);
  CHECK(grid.proportions.at({0, 0}) == 0.25);
  CHECK(grid.proportions.at({2, 0}) == 0.25);
  CHECK(grid.proportions.size() == 3);

  SECTION("proportions sum to one") {
    double sum = 0;
    for (const auto& [cell, p] : grid.proportions) sum += p;
    CHECK_THAT(sum, Catch::Matchers::WithinAbs(1.0, 1e-9));
  }
  SECTION("single-valued group collapses to one full cell") {
    HeatmapGrid g2 = heatmap({{0, 0}, {0, 0}}, "z");
    CHECK(g2.proportions.size() == 1);
    CHECK(g2.proportions.at({0, 0}) == 1.0);
  }
  SECTION("a 70-of-100 fixture puts 0.70 of the mass outside (0,0)") {
    std::vector<MatchCounts> hundred;
    for (int i = 0; i < 70; ++i) hundred.push_back({1 + i % 3, i % 2});
    for (int i = 0; i < 30; ++i) hundred.push_back({0, 0});
    HeatmapGrid g3 = heatmap(hundred, "presence");
    double outside = 0.0;
    for (const auto& [cell, p] : g3.proportions) {
      if (cell != std::pair<int, int>{0, 0}) outside += p;
    }
    CHECK_THAT(outside, Catch::Matchers::WithinAbs(0.70, 1e-12));
  }
  SECTION("empty group is an error") {
    CHECK_THROWS_AS(heatmap({}, "e"), std::invalid_argument);
  }
}

TEST_CASE("mann_whitney handles the pinned examples") {
  SECTION("identical samples") {
    TestResult r = mann_whitney({1, 2, 3}, {1, 2, 3});
    CHECK(r.u1 == 4.5);
    CHECK(r.u2 == 4.5);
    CHECK_THAT(r.p, Catch::Matchers::WithinAbs(1.0, 1e-9));
    CHECK(r.method == TestMethod::NormalApprox);  // ties block the exact path
  }
  SECTION("fully separated small samples") {
    TestResult r = mann_whitney({1, 2, 3}, {4, 5, 6});
    CHECK(r.u1 == 0.0);
    CHECK(r.u2 == 9.0);
    CHECK(r.method == TestMethod::Exact);
    CHECK_THAT(r.p, Catch::Matchers::WithinAbs(0.1, 1e-12));  // 2 / C(6,3)
  }
  SECTION("u1 + u2 always equals n1 * n2") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> a, b;
      int n1 = 1 + static_cast<int>(gen() % 10);
      int n2 = 1 + static_cast<int>(gen() % 10);
      for (int i = 0; i < n1; ++i) a.push_back(static_cast<double>(gen() % 6));
      for (int i = 0; i < n2; ++i) b.push_back(static_cast<double>(gen() % 6));
      TestResult r = mann_whitney(a, b);
      CHECK(r.u1 + r.u2 == static_cast<double>(n1) * n2);
      CHECK(r.p >= 0.0);
      CHECK(r.p <= 1.0);
    }
  }
  SECTION("empty sample is an error") {
    CHECK_THROWS_AS(mann_whitney({}, {1.0}), std::invalid_argument);
  }
}

TEST_CASE("mann_whitney is invariant under strictly increasing transforms") {
  std::vector<double> a = {0, 2, 2, 5, 7};
  std::vector<double> b = {1, 2, 3, 3, 9, 11};
  TestResult base = mann_whitney(a, b);

  auto transform = [](std::vector<double> v, auto f) {
    for (double& x : v) x = f(x);
    return v;
  };
  auto cube_plus = [](double x) { return x * x * x + 2.0; };
  auto expish = [](double x) { return std::exp(x / 3.0); };
  for (auto f : {+cube_plus, +expish}) {
    TestResult r = mann_whitney(transform(a, f), transform(b, f));
    CHECK(r.u1 == base.u1);
    CHECK(r.u2 == base.u2);
    CHECK(r.p == base.p);
    CHECK(r.method == base.method);
  }
}

TEST_CASE("significance_report runs the four fixed comparisons") {
  const LexicalDatabase& db = testutil::fixture_db();
  auto corpus = testutil::load_corpus("corpus_small.jsonl");
  Lexicon lex = build_lexicon(corpus, db);
  MatchReport report = significance_report(corpus, lex, db);

  REQUIRE(report.tests.size() == 4);
  CHECK(report.tests[0].group1 == "Contrast-Explicit");
  CHECK(report.tests[0].group2 == "Concession-Explicit");
  CHECK(report.tests[1].group1 == "Contrast-Implicit");
  CHECK(report.tests[1].group2 == "Concession-Implicit");
  CHECK(report.tests[2].group1 == "Contrast-Explicit");
  CHECK(report.tests[2].group2 == "Contrast-Implicit");
  CHECK(report.tests[3].group1 == "Concession-Explicit");
  CHECK(report.tests[3].group2 == "Concession-Implicit");
  for (const SignificanceRow& row : report.tests) CHECK(row.computable);

  SECTION("an empty group flags its comparisons as not computable") {
    std::vector<RelationRecord> explicit_only;
    for (const RelationRecord& r : corpus) {
      if (r.explicitness == Explicitness::Explicit) explicit_only.push_back(r);
    }
    MatchReport partial = significance_report(explicit_only, lex, db);
    REQUIRE(partial.tests.size() == 4);
    CHECK(partial.tests[0].computable);        // both explicit groups exist
    CHECK_FALSE(partial.tests[1].computable);  // implicit groups are empty
    CHECK_FALSE(partial.tests[2].computable);
    CHECK_FALSE(partial.tests[3].computable);
  }
}

TEST_CASE("significance_report scalar modes change the samples") {
  const LexicalDatabase& db = testutil::fixture_db();
  auto corpus = testutil::load_corpus("corpus_small.jsonl");
  Lexicon lex = build_lexicon(corpus, db);

  MatchReport syn = significance_report(corpus, lex, db, ScalarMode::SynOnly);
  MatchReport ant = significance_report(corpus, lex, db, ScalarMode::AntOnly);
  // the grouping is identical; only the tested scalars differ
  CHECK(syn.groups == ant.groups);
  REQUIRE(syn.tests.size() == 4);
  REQUIRE(ant.tests.size() == 4);
}

TEST_CASE("a constructed shift is detected by test 4") {
  // explicit concession relations carry systematically higher match counts
  const LexicalDatabase& db = testutil::fixture_db();
  std::vector<RelationRecord> corpus;
  auto push = [&](const std::string& id, Sense s, Explicitness e,
                  const std::string& a1, const std::string& a2) {
    corpus.push_back(testutil::make_record(id, s, e, "x", a1, a2));
  };
  // concession-explicit: synonym + antonym pairs across arguments
  for (int i = 0; i < 12; ++i) {
    push("ce" + std::to_string(i), Sense::Concession, Explicitness::Explicit,
         "large profit always", "big loss never");
  }
  // concession-implicit: no shared sets at all, but nonzero vectors
  for (int i = 0; i < 12; ++i) {
    push("ci" + std::to_string(i), Sense::Concession, Explicitness::Implicit,
         "cold church", "dog class");
  }
  // contrast groups to keep the other comparisons alive
  for (int i = 0; i < 6; ++i) {
    push("xe" + std::to_string(i), Sense::Contrast, Explicitness::Explicit,
         "good man", "bad foot");
    push("xi" + std::to_string(i), Sense::Contrast, Explicitness::Implicit,
         "good dog", "bad man");
  }
  Lexicon lex = build_lexicon(corpus, db);
  MatchReport report = significance_report(corpus, lex, db);
  REQUIRE(report.tests[3].computable);
  CHECK(report.tests[3].result.p < 0.05);

  SECTION("identically distributed groups stay non-significant") {
    // contrast explicit and implicit were built with the same match profile
    REQUIRE(report.tests[2].computable);
    CHECK(report.tests[2].result.p > 0.2);
  }
}

TEST_CASE("heatmap rendering folds cells beyond the cap") {
  std::vector<MatchCounts> group = {{5, 0}, {4, 0}, {1, 1}};
  HeatmapGrid grid = heatmap(group, "overflow");
  std::string svg = synant::svg::heatmap_chart(grid, 2);
  CHECK(svg.find(">2+</text>") != std::string::npos);  // folded n_syn axis
  CHECK(svg.find(">0.67</text>") != std::string::npos);  // 2/3 mass in the margin
}
