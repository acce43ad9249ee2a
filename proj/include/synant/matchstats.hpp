#ifndef SYNANT_MATCHSTATS_HPP
#define SYNANT_MATCHSTATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "synant/corpus.hpp"
#include "synant/error.hpp"
#include "synant/lexicon.hpp"
#include "synant/vectorize.hpp"

namespace synant {

struct MatchCounts {
  int n_syn = 0;
  int n_ant = 0;
  bool operator==(const MatchCounts&) const = default;
};

// Count the positive (synonymy) and negative (antonymy) components of the
// element-wise product of the two argument vectors.
inline MatchCounts match_counts(const ArgumentVector& r1,
                                const ArgumentVector& r2) {
  if (r1.dimension != r2.dimension) {
    throw std::invalid_argument("match_counts: dimensions differ (" +
                                std::to_string(r1.dimension) + " vs " +
                                std::to_string(r2.dimension) + ")");
  }
  MatchCounts mc;
  const ArgumentVector& small = r1.coords.size() <= r2.coords.size() ? r1 : r2;
  const ArgumentVector& large = r1.coords.size() <= r2.coords.size() ? r2 : r1;
  for (const auto& [index, value] : small.coords) {
    long prod = static_cast<long>(value) * large.at(index);
    if (prod > 0) ++mc.n_syn;
    if (prod < 0) ++mc.n_ant;
  }
  return mc;
}

struct HeatmapGrid {
  std::string label;  // group, e.g. "Contrast-Explicit"
  std::map<std::pair<int, int>, int> counts;        // (n_syn, n_ant) -> count
  std::map<std::pair<int, int>, double> proportions;
  int total = 0;
};

inline HeatmapGrid heatmap(const std::vector<MatchCounts>& group,
                           const std::string& label = "") {
  if (group.empty()) {
    throw std::invalid_argument("heatmap: empty group");
  }
  HeatmapGrid grid;
  grid.label = label;
  grid.total = static_cast<int>(group.size());
  for (const MatchCounts& mc : group) ++grid.counts[{mc.n_syn, mc.n_ant}];
  for (const auto& [cell, count] : grid.counts) {
    grid.proportions[cell] =
        static_cast<double>(count) / static_cast<double>(grid.total);
  }
  return grid;
}

enum class TestMethod { Exact, NormalApprox };

struct TestResult {
  double u1 = 0.0;
  double u2 = 0.0;
  double p = 1.0;
  int n1 = 0;
  int n2 = 0;
  TestMethod method = TestMethod::NormalApprox;
};

namespace detail {

// Midranks over the pooled samples; ties share the average rank.
inline std::vector<double> midranks(const std::vector<double>& pooled) {
  const size_t n = pooled.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pooled[a] < pooled[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

inline bool has_ties(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

// Exact two-sided p for tie-free samples: 2 * P(U1 <= min(u1, u2)) over
// all C(n1+n2, n1) equally likely rank arrangements, capped at 1. The
// doubling covers the opposite tail through the symmetry of U1 about
// n1*n2/2.
inline double exact_two_sided_p(int n1, int n2, double u_min) {
  const int n = n1 + n2;
  std::vector<int> pick(static_cast<size_t>(n1));
  for (int i = 0; i < n1; ++i) pick[static_cast<size_t>(i)] = i + 1;
  long long total = 0, at_or_below = 0;
  const double base = static_cast<double>(n1) * (n1 + 1) / 2.0;
  while (true) {
    ++total;
    double rank_sum = 0;
    for (int r : pick) rank_sum += r;
    double u = rank_sum - base;
    if (u <= u_min + 1e-12) ++at_or_below;
    // next combination of n1 ranks out of n
    int i = n1 - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - (n1 - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < n1; ++j) {
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  double p = 2.0 * static_cast<double>(at_or_below) / static_cast<double>(total);
  return std::min(p, 1.0);
}

inline double normal_two_sided_p(double u_max, int n1, int n2,
                                 const std::vector<double>& pooled) {
  const double n = static_cast<double>(n1 + n2);
  const double mu = static_cast<double>(n1) * n2 / 2.0;
  // tie-corrected variance
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  double var = (static_cast<double>(n1) * n2 / 12.0) *
               ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (var <= 0.0) return 1.0;  // all values identical
  double z = (u_max - mu - 0.5) / std::sqrt(var);  // continuity correction
  if (z < 0.0) z = 0.0;
  return std::erfc(z / std::sqrt(2.0));
}

}  // namespace detail

// Mann-Whitney-Wilcoxon two-sample test, two-sided. U statistics come from
// midrank assignment. Small tie-free samples (n1, n2 <= 8) get the exact
// p by enumeration of rank arrangements; everything else the normal
// approximation with tie and continuity corrections.
inline TestResult mann_whitney(const std::vector<double>& sample1,
                               const std::vector<double>& sample2) {
  if (sample1.empty() || sample2.empty()) {
    throw std::invalid_argument("mann_whitney: empty sample");
  }
  TestResult res;
  res.n1 = static_cast<int>(sample1.size());
  res.n2 = static_cast<int>(sample2.size());

  std::vector<double> pooled = sample1;
  pooled.insert(pooled.end(), sample2.begin(), sample2.end());
  std::vector<double> ranks = detail::midranks(pooled);
  double rank_sum1 = 0.0;
  for (size_t i = 0; i < sample1.size(); ++i) rank_sum1 += ranks[i];
  res.u1 = rank_sum1 - static_cast<double>(res.n1) * (res.n1 + 1) / 2.0;
  res.u2 = static_cast<double>(res.n1) * res.n2 - res.u1;

  bool small = res.n1 <= 8 && res.n2 <= 8;
  if (small && !detail::has_ties(pooled)) {
    res.method = TestMethod::Exact;
    res.p = detail::exact_two_sided_p(res.n1, res.n2, std::min(res.u1, res.u2));
  } else {
    res.method = TestMethod::NormalApprox;
    res.p = detail::normal_two_sided_p(std::max(res.u1, res.u2), res.n1,
                                       res.n2, pooled);
  }
  return res;
}

enum class ScalarMode { Total, SynOnly, AntOnly };

inline std::string_view scalar_mode_name(ScalarMode m) {
  switch (m) {
    case ScalarMode::Total: return "total";
    case ScalarMode::SynOnly: return "syn";
    case ScalarMode::AntOnly: return "ant";
  }
  return "?";
}

struct SignificanceRow {
  int test_id = 0;
  std::string group1;
  std::string group2;
  bool computable = false;
  TestResult result;
};

inline std::string group_label(Sense s, Explicitness e) {
  return std::string(sense_name(s)) + "-" + std::string(explicitness_name(e));
}

struct MatchReport {
  // Match counts per retained relation, keyed by (sense, explicitness).
  std::map<std::pair<Sense, Explicitness>, std::vector<MatchCounts>> groups;
  std::vector<SignificanceRow> tests;
  RetentionStats retention;
};

// The four comparisons of the significance table, in fixed order, under
// the All representation. The per-relation scalar defaults to
// n_syn + n_ant. A comparison with an empty side is reported as not
// computable; the others still run.
inline MatchReport significance_report(
    const std::vector<RelationRecord>& corpus, const Lexicon& lexicon,
    const LexicalDatabase& db, ScalarMode mode = ScalarMode::Total) {
  MatchReport report;
  RepresentedCorpus all = represent_corpus(
      corpus, lexicon, db, ablation_mask(lexicon, MaskKind::All));
  report.retention = all.retention;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (all.relations[i].discarded) continue;
    MatchCounts mc = match_counts(all.relations[i].r1, all.relations[i].r2);
    report.groups[{corpus[i].sense, corpus[i].explicitness}].push_back(mc);
  }

  auto scalar = [mode](const MatchCounts& mc) -> double {
    switch (mode) {
      case ScalarMode::Total: return mc.n_syn + mc.n_ant;
      case ScalarMode::SynOnly: return mc.n_syn;
      case ScalarMode::AntOnly: return mc.n_ant;
    }
    return 0.0;
  };
  auto sample = [&](Sense s, Explicitness e) {
    std::vector<double> out;
    auto it = report.groups.find({s, e});
    if (it != report.groups.end()) {
      for (const MatchCounts& mc : it->second) out.push_back(scalar(mc));
    }
    return out;
  };

  const std::pair<std::pair<Sense, Explicitness>,
                  std::pair<Sense, Explicitness>>
      comparisons[4] = {
          {{Sense::Contrast, Explicitness::Explicit},
           {Sense::Concession, Explicitness::Explicit}},
          {{Sense::Contrast, Explicitness::Implicit},
           {Sense::Concession, Explicitness::Implicit}},
          {{Sense::Contrast, Explicitness::Explicit},
           {Sense::Contrast, Explicitness::Implicit}},
          {{Sense::Concession, Explicitness::Explicit},
           {Sense::Concession, Explicitness::Implicit}},
      };
  for (int t = 0; t < 4; ++t) {
    SignificanceRow row;
    row.test_id = t + 1;
    row.group1 = group_label(comparisons[t].first.first,
                             comparisons[t].first.second);
    row.group2 = group_label(comparisons[t].second.first,
                             comparisons[t].second.second);
    std::vector<double> s1 = sample(comparisons[t].first.first,
                                    comparisons[t].first.second);
    std::vector<double> s2 = sample(comparisons[t].second.first,
                                    comparisons[t].second.second);
    if (!s1.empty() && !s2.empty()) {
      row.computable = true;
      row.result = mann_whitney(s1, s2);
    }
    report.tests.push_back(std::move(row));
  }
  return report;
}

}  // namespace synant

#endif  // SYNANT_MATCHSTATS_HPP
