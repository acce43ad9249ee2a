#ifndef SYNANT_GRAPH_HPP
#define SYNANT_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "synant/corpus.hpp"
#include "synant/error.hpp"
#include "synant/lexicon.hpp"
#include "synant/strutil.hpp"
#include "synant/vectorize.hpp"

namespace synant {

// Undirected graph whose nodes are distinct argument vectors and whose
// edges join the two arguments of each relation. Parallel relations pile
// up in edge_multiplicity; the adjacency itself stays unweighted.
struct RelationGraph {
  std::vector<ArgumentVector> nodes;  // first-appearance order
  std::map<std::pair<int, int>, int> edge_multiplicity;  // key u <= v, 0-based
  int relation_count = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int edge_count() const { return static_cast<int>(edge_multiplicity.size()); }
};

// One node per distinct vector value, arg1 and arg2 pooled; one edge per
// relation (a self-loop when the two arguments coincide). With
// position_tagged the arg1/arg2 origin is part of node identity.
inline RelationGraph build_graph(const std::vector<RelationVectors>& relations,
                                 bool position_tagged = false) {
  RelationGraph g;
  std::map<std::pair<ArgumentVector, int>, int> node_of;
  auto intern = [&](const ArgumentVector& v, int tag) {
    auto key = std::make_pair(v, position_tagged ? tag : 0);
    auto [it, inserted] = node_of.emplace(key, g.node_count());
    if (inserted) g.nodes.push_back(v);
    return it->second;
  };
  for (const RelationVectors& rv : relations) {
    if (rv.discarded) {
      throw std::invalid_argument("build_graph: discarded relation " + rv.id);
    }
    int u = intern(rv.r1, 1);
    int v = intern(rv.r2, 2);
    if (u > v) std::swap(u, v);
    ++g.edge_multiplicity[{u, v}];
    ++g.relation_count;
  }
  return g;
}

using CentralityScores = std::vector<double>;

// Dominant eigenvector of the unweighted adjacency matrix (a self-loop
// contributes 1 on the diagonal). Power iteration from the all-ones
// vector, L2-normalized each step, until successive iterates differ by
// less than 1e-10 in the max norm. The iteration multiplies by A + I:
// the eigenvectors are unchanged, and without the shift the iterates
// oscillate forever on bipartite components. An edgeless graph gets
// uniform scores 1/sqrt(n).
inline CentralityScores eigencentrality(const RelationGraph& g,
                                        int max_iterations = 10000,
                                        double tolerance = 1e-10) {
  const int n = g.node_count();
  if (n == 0) {
    throw std::invalid_argument("eigencentrality: empty graph");
  }
  CentralityScores x(static_cast<size_t>(n), 1.0 / std::sqrt(double(n)));
  if (g.edge_multiplicity.empty()) return x;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_multiplicity.size());
  for (const auto& [e, mult] : g.edge_multiplicity) edges.push_back(e);

  CentralityScores next(static_cast<size_t>(n));
  double residual = 0.0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    for (int i = 0; i < n; ++i) next[static_cast<size_t>(i)] = x[static_cast<size_t>(i)];
    for (const auto& [u, v] : edges) {
      if (u == v) {
        next[static_cast<size_t>(u)] += x[static_cast<size_t>(u)];
      } else {
        next[static_cast<size_t>(u)] += x[static_cast<size_t>(v)];
        next[static_cast<size_t>(v)] += x[static_cast<size_t>(u)];
      }
    }
    double norm = 0.0;
    for (double s : next) norm += s * s;
    norm = std::sqrt(norm);
    for (double& s : next) s /= norm;
    residual = 0.0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(next[static_cast<size_t>(i)] -
                                             x[static_cast<size_t>(i)]));
    }
    x.swap(next);
    if (residual < tolerance) return x;
  }
  throw ConvergenceError(
      "eigencentrality: no convergence after " +
          std::to_string(max_iterations) +
          " iterations (residual " + format_double(residual) + ")",
      residual);
}

// Ratio of the maximum to the mean node eigencentrality; >= 1, equal to 1
// exactly when every node scores the same.
inline double phi(const RelationGraph& g) {
  CentralityScores scores = eigencentrality(g);
  double max = scores.front(), min = scores.front(), sum = 0.0;
  for (double s : scores) {
    max = std::max(max, s);
    min = std::min(min, s);
    sum += s;
  }
  if (max == min) return 1.0;
  return max / (sum / static_cast<double>(scores.size()));
}

struct ConnectiveClass {
  std::string connective;
  Sense sense = Sense::Contrast;
  int count = 0;
  char cls = 'B';  // 'A' with at least 100 instances, else 'B'
};

inline ConnectiveClass classify_count(const std::string& connective,
                                      Sense sense, int count) {
  return ConnectiveClass{connective, sense, count, count >= 100 ? 'A' : 'B'};
}

// Relation counts per (sense, connective) over the raw corpus, ordered by
// (sense, connective).
inline std::vector<ConnectiveClass> classify_connectives(
    const std::vector<RelationRecord>& corpus) {
  std::map<std::pair<Sense, std::string>, int> counts;
  for (const RelationRecord& r : corpus) ++counts[{r.sense, r.connective}];
  std::vector<ConnectiveClass> out;
  for (const auto& [key, count] : counts) {
    out.push_back(classify_count(key.second, key.first, count));
  }
  return out;
}

struct PhiOptions {
  bool split_explicit_implicit = false;
  bool position_tagged_nodes = false;
};

struct PhiRow {
  Sense sense = Sense::Contrast;
  char cls = 'B';
  MaskKind mask = MaskKind::All;
  std::string connective;  // with split: "conn:explicit" / "conn:implicit"
  int nodes = 0;
  int edges = 0;
  double phi_value = 1.0;
};

struct PhiSummary {
  Sense sense = Sense::Contrast;
  char cls = 'B';
  MaskKind mask = MaskKind::All;
  int n_connectives = 0;     // 0 marks an absent cell
  double mean_phi = 0.0;
};

struct PhiReport {
  std::vector<PhiRow> rows;
  std::vector<PhiSummary> summaries;
  RetentionStats retention;
};

// Per (sense, class, mask, connective): the phi of the graph built from
// that connective's retained relations; per (sense, class, mask): the
// unweighted mean of phi over the class's connectives.
inline PhiReport phi_report(const std::vector<RelationRecord>& corpus,
                            const Lexicon& lexicon, const LexicalDatabase& db,
                            const PhiOptions& options = {}) {
  PhiReport report;

  // Vectorize once under All; per-mask vectors come from projection.
  RepresentedCorpus all = represent_corpus(corpus, lexicon, db,
                                           ablation_mask(lexicon, MaskKind::All));
  report.retention = all.retention;

  struct Group {
    Sense sense;
    std::string label;
    char cls;
    std::vector<size_t> record_indices;  // retained only
  };
  std::map<std::pair<Sense, std::string>, int> group_counts;
  for (const RelationRecord& r : corpus) {
    std::string label(r.connective);
    if (options.split_explicit_implicit) {
      label += r.explicitness == Explicitness::Explicit ? ":explicit"
                                                        : ":implicit";
    }
    ++group_counts[{r.sense, label}];
  }
  std::map<std::pair<Sense, std::string>, Group> groups;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (all.relations[i].discarded) continue;
    const RelationRecord& r = corpus[i];
    std::string label(r.connective);
    if (options.split_explicit_implicit) {
      label += r.explicitness == Explicitness::Explicit ? ":explicit"
                                                        : ":implicit";
    }
    auto key = std::make_pair(r.sense, label);
    Group& g = groups[key];
    if (g.record_indices.empty()) {
      g.sense = r.sense;
      g.label = label;
      g.cls = group_counts[key] >= 100 ? 'A' : 'B';
    }
    g.record_indices.push_back(i);
  }

  for (MaskKind kind : kAllMasks) {
    AblationMask mask = ablation_mask(lexicon, kind);
    std::map<std::pair<Sense, char>, std::vector<double>> cell_values;
    for (const auto& [key, group] : groups) {
      std::vector<RelationVectors> rels;
      rels.reserve(group.record_indices.size());
      for (size_t i : group.record_indices) {
        const RelationVectors& rv = all.relations[i];
        rels.push_back(RelationVectors{rv.id, project(rv.r1, mask),
                                       project(rv.r2, mask), false});
      }
      RelationGraph graph = build_graph(rels, options.position_tagged_nodes);
      double value = phi(graph);
      report.rows.push_back(PhiRow{group.sense, group.cls, kind, group.label,
                                   graph.node_count(), graph.edge_count(),
                                   value});
      cell_values[{group.sense, group.cls}].push_back(value);
    }
    for (Sense sense : {Sense::Contrast, Sense::Concession}) {
      for (char cls : {'A', 'B'}) {
        PhiSummary s;
        s.sense = sense;
        s.cls = cls;
        s.mask = kind;
        auto it = cell_values.find({sense, cls});
        if (it != cell_values.end()) {
          s.n_connectives = static_cast<int>(it->second.size());
          double sum = 0.0;
          for (double v : it->second) sum += v;
          s.mean_phi = sum / static_cast<double>(it->second.size());
        }
        report.summaries.push_back(s);
      }
    }
  }
  return report;
}

// Edge-list export: `node_id node_id multiplicity` lines.
inline void write_graph_edges(std::ostream& out, const RelationGraph& g) {
  for (const auto& [e, mult] : g.edge_multiplicity) {
    out << e.first << " " << e.second << " " << mult << "\n";
  }
}

// Node table: `node_id index:value ...` with coordinates ascending.
inline void write_graph_nodes(std::ostream& out, const RelationGraph& g) {
  for (int i = 0; i < g.node_count(); ++i) {
    out << i;
    for (const auto& [index, value] : g.nodes[static_cast<size_t>(i)].coords) {
      out << " " << index << ":" << value;
    }
    out << "\n";
  }
}

}  // namespace synant

#endif  // SYNANT_GRAPH_HPP
