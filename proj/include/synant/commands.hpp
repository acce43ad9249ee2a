#ifndef SYNANT_COMMANDS_HPP
#define SYNANT_COMMANDS_HPP

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "synant/checksum.hpp"
#include "synant/config.hpp"
#include "synant/corpus.hpp"
#include "synant/error.hpp"
#include "synant/fixture.hpp"
#include "synant/graph.hpp"
#include "synant/lexicon.hpp"
#include "synant/matchstats.hpp"
#include "synant/svg.hpp"
#include "synant/vectorize.hpp"
#include "synant/wordnet.hpp"

namespace synant {

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline void require_file(const std::filesystem::path& p, const char* what) {
  if (p.empty()) throw ConfigError(std::string(what) + " path not set");
  if (!std::filesystem::exists(p)) {
    throw ConfigError(std::string(what) + " not found: " + p.string());
  }
}

inline void write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + p.string());
  out << s;
}

struct LoadedInputs {
  LexicalDatabase db;
  std::vector<RelationRecord> corpus;
  std::string corpus_checksum;
  std::string curation_checksum = "none";
  std::vector<CurationDirective> directives;
};

inline LoadedInputs load_inputs(const RunConfig& cfg, bool need_curation) {
  require_file(cfg.corpus, "corpus file");
  require_file(cfg.wordnet_dir, "wordnet directory");
  LoadedInputs in;
  in.db = load_wordnet(cfg.wordnet_dir);
  std::ifstream corpus_stream(cfg.corpus);
  if (!corpus_stream) {
    throw ConfigError("cannot open corpus: " + cfg.corpus.string());
  }
  in.corpus = parse_corpus(corpus_stream);
  in.corpus_checksum = checksum_file(cfg.corpus);
  if (need_curation && !cfg.curation.empty()) {
    require_file(cfg.curation, "curation file");
    std::ifstream cur(cfg.curation);
    in.directives = parse_curation_directives(cur);
    in.curation_checksum = checksum_file(cfg.curation);
  }
  return in;
}

inline std::vector<std::string> provenance_lines(const Provenance& p,
                                                 const RunConfig& cfg,
                                                 const std::string& extra = "") {
  std::vector<std::string> lines;
  lines.push_back("tool_version=" + p.tool_version);
  lines.push_back("corpus_checksum=" + p.corpus_checksum);
  lines.push_back("wordnet_checksum=" + p.wordnet_checksum);
  lines.push_back("curation_checksum=" + p.curation_checksum);
  std::string flags =
      std::string("flags: split_explicit_implicit=") +
      (cfg.split_explicit_implicit ? "true" : "false") +
      " position_tagged_nodes=" + (cfg.position_tagged_nodes ? "true" : "false") +
      " test_scalar=" + std::string(scalar_mode_name(cfg.test_scalar)) +
      " heatmap_cap=" + std::to_string(cfg.heatmap_cap);
  lines.push_back(flags);
  if (!extra.empty()) lines.push_back(extra);
  return lines;
}

inline std::string csv_comments(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) out += "# " + l + "\n";
  return out;
}

inline Lexicon load_lexicon_file(const RunConfig& cfg) {
  require_file(cfg.lexicon_path(), "lexicon file");
  std::ifstream in(cfg.lexicon_path());
  if (!in) throw ConfigError("cannot open lexicon: " + cfg.lexicon_path().string());
  return read_lexicon(in);
}

}  // namespace detail

struct BuildLexiconResult {
  std::filesystem::path lexicon_file;
  int m = 0;
  int adjectives = 0, nouns = 0, verbs = 0, adverbs = 0;
  std::string wordnet_checksum;
};

// build-lexicon: parse the corpus, run the set construction scan, curate,
// and write lexicon.json with provenance.
inline BuildLexiconResult cmd_build_lexicon(const RunConfig& cfg,
                                            std::ostream& log = std::cout) {
  detail::LoadedInputs in = detail::load_inputs(cfg, true);
  std::filesystem::create_directories(cfg.output_dir);

  Lexicon raw = build_lexicon(in.corpus, in.db);
  raw.provenance = Provenance{in.corpus_checksum, in.db.checksum,
                              in.curation_checksum, kToolVersion};
  Lexicon lex = curate(raw, in.directives);

  BuildLexiconResult res;
  res.lexicon_file = cfg.lexicon_path();
  res.m = lex.m();
  res.adjectives = lex.n1;
  res.nouns = lex.n2 - lex.n1;
  res.verbs = lex.n3 - lex.n2;
  res.adverbs = lex.m() - lex.n3;
  res.wordnet_checksum = in.db.checksum;

  std::ostringstream body;
  write_lexicon(body, lex);
  detail::write_text(res.lexicon_file, body.str());

  log << "lexicon: m=" << res.m << " adjectives=" << res.adjectives
      << " nouns=" << res.nouns << " verbs=" << res.verbs
      << " adverbs=" << res.adverbs << "\n";
  log << "wordnet checksum: " << res.wordnet_checksum << "\n";
  log << "written: " << res.lexicon_file.string() << "\n";
  return res;
}

struct PhiCommandResult {
  std::filesystem::path csv_file;
  std::vector<std::filesystem::path> svg_files;
  PhiReport report;
};

inline std::string phi_report_csv(const PhiReport& report,
                                  const std::vector<std::string>& comments) {
  std::string out = detail::csv_comments(comments);
  out += "sense,class,mask,connective,nodes,edges,phi,mean_phi\n";
  for (const PhiRow& r : report.rows) {
    out += std::string(sense_name(r.sense)) + "," + r.cls + "," +
           std::string(mask_name(r.mask)) + "," + detail::csv_field(r.connective) +
           "," + std::to_string(r.nodes) + "," + std::to_string(r.edges) + "," +
           format_double(r.phi_value) + ",\n";
  }
  for (const PhiSummary& s : report.summaries) {
    out += std::string(sense_name(s.sense)) + "," + s.cls + "," +
           std::string(mask_name(s.mask)) + ",,,,," +
           (s.n_connectives > 0 ? format_double(s.mean_phi) : std::string()) +
           "\n";
  }
  return out;
}

// phi: the mean-phi CSV plus one grouped bar chart per ablation mask
// (All side by side with the ablated representation).
inline PhiCommandResult cmd_phi(const RunConfig& cfg,
                                std::ostream& log = std::cout) {
  detail::LoadedInputs in = detail::load_inputs(cfg, false);
  Lexicon lex = detail::load_lexicon_file(cfg);
  std::filesystem::create_directories(cfg.output_dir);

  PhiOptions options;
  options.split_explicit_implicit = cfg.split_explicit_implicit;
  options.position_tagged_nodes = cfg.position_tagged_nodes;

  PhiCommandResult res;
  res.report = phi_report(in.corpus, lex, in.db, options);

  Provenance prov{in.corpus_checksum, in.db.checksum,
                  lex.provenance.curation_checksum.empty()
                      ? "none"
                      : lex.provenance.curation_checksum,
                  kToolVersion};
  std::vector<std::string> comments = detail::provenance_lines(prov, cfg);

  res.csv_file = cfg.output_dir / "phi.csv";
  detail::write_text(res.csv_file, phi_report_csv(res.report, comments));

  auto find_mean = [&](Sense sense, char cls, MaskKind mask) {
    for (const PhiSummary& s : res.report.summaries) {
      if (s.sense == sense && s.cls == cls && s.mask == mask &&
          s.n_connectives > 0) {
        return std::optional<double>(s.mean_phi);
      }
    }
    return std::optional<double>();
  };
  for (MaskKind kind : {MaskKind::NoAdjective, MaskKind::NoNoun,
                        MaskKind::NoVerb, MaskKind::NoAdverb}) {
    std::vector<svg::Bar> bars;
    for (char cls : {'A', 'B'}) {
      std::string group = std::string("class ") + cls;
      struct SeriesSpec {
        Sense sense;
        MaskKind mask;
        const char* name;
        const char* color;
      };
      const SeriesSpec series[4] = {
          {Sense::Contrast, MaskKind::All, "contrast R_all", "#ff7f0e"},
          {Sense::Contrast, kind, "contrast ablated", "#ffbb78"},
          {Sense::Concession, MaskKind::All, "concession R_all", "#1f77b4"},
          {Sense::Concession, kind, "concession ablated", "#aec7e8"},
      };
      for (const SeriesSpec& sp : series) {
        if (auto mean = find_mean(sp.sense, cls, sp.mask)) {
          bars.push_back(svg::Bar{group, sp.name, sp.color, *mean});
        }
      }
    }
    std::string title = "mean phi: R_all vs R_" + std::string(mask_name(kind));
    std::filesystem::path file =
        cfg.output_dir /
        ("phi_all_vs_" + std::string(mask_name(kind)) + ".svg");
    detail::write_text(file, svg::bar_chart(title, "mean phi", bars, comments));
    res.svg_files.push_back(file);
  }

  if (cfg.export_graphs) {
    std::filesystem::create_directories(cfg.output_dir / "graphs");
    RepresentedCorpus all = represent_corpus(
        in.corpus, lex, in.db, ablation_mask(lex, MaskKind::All));
    std::map<std::pair<Sense, std::string>, std::vector<RelationVectors>> keep;
    for (size_t i = 0; i < in.corpus.size(); ++i) {
      if (all.relations[i].discarded) continue;
      keep[{in.corpus[i].sense, in.corpus[i].connective}].push_back(
          all.relations[i]);
    }
    for (const auto& [key, rels] : keep) {
      RelationGraph g = build_graph(rels, cfg.position_tagged_nodes);
      std::string stem = std::string(sense_name(key.first)) + "_" + key.second;
      for (char& c : stem) {
        if (c == ' ') c = '_';
      }
      std::ostringstream edges, nodes;
      write_graph_edges(edges, g);
      write_graph_nodes(nodes, g);
      detail::write_text(cfg.output_dir / "graphs" / (stem + ".edges"),
                         edges.str());
      detail::write_text(cfg.output_dir / "graphs" / (stem + ".nodes"),
                         nodes.str());
    }
  }

  log << "phi report: " << res.csv_file.string() << " and "
      << res.svg_files.size() << " charts\n";
  return res;
}

struct MatchCommandResult {
  std::filesystem::path heatmap_csv;
  std::filesystem::path tests_csv;
  std::vector<std::filesystem::path> svg_files;
  MatchReport report;
};

inline std::string heatmap_csv_text(const MatchReport& report,
                                    const std::vector<std::string>& comments) {
  std::string out = detail::csv_comments(comments);
  out += "group,n_syn,n_ant,count,proportion\n";
  for (const auto& [key, counts] : report.groups) {
    if (counts.empty()) continue;
    HeatmapGrid grid = heatmap(counts, group_label(key.first, key.second));
    for (const auto& [cell, count] : grid.counts) {
      out += grid.label + "," + std::to_string(cell.first) + "," +
             std::to_string(cell.second) + "," + std::to_string(count) + "," +
             format_double(grid.proportions.at(cell)) + "\n";
    }
  }
  return out;
}

inline std::string tests_csv_text(const MatchReport& report,
                                  const std::vector<std::string>& comments) {
  std::string out = detail::csv_comments(comments);
  out += "test_id,group1,group2,n1,n2,u1,u2,p,method\n";
  for (const SignificanceRow& row : report.tests) {
    out += std::to_string(row.test_id) + "," + row.group1 + "," + row.group2;
    if (row.computable) {
      out += "," + std::to_string(row.result.n1) + "," +
             std::to_string(row.result.n2) + "," + format_double(row.result.u1) +
             "," + format_double(row.result.u2) + "," +
             format_double(row.result.p) + "," +
             (row.result.method == TestMethod::Exact ? "exact" : "normal");
    } else {
      out += ",,,,,,not-computable";
    }
    out += "\n";
  }
  return out;
}

// match: heatmap CSV, one heatmap SVG per (sense, explicitness) group with
// data, and the four-row significance CSV.
inline MatchCommandResult cmd_match(const RunConfig& cfg,
                                    std::ostream& log = std::cout) {
  detail::LoadedInputs in = detail::load_inputs(cfg, false);
  Lexicon lex = detail::load_lexicon_file(cfg);
  std::filesystem::create_directories(cfg.output_dir);

  MatchCommandResult res;
  res.report = significance_report(in.corpus, lex, in.db, cfg.test_scalar);

  Provenance prov{in.corpus_checksum, in.db.checksum,
                  lex.provenance.curation_checksum.empty()
                      ? "none"
                      : lex.provenance.curation_checksum,
                  kToolVersion};
  std::vector<std::string> comments = detail::provenance_lines(prov, cfg);

  res.heatmap_csv = cfg.output_dir / "heatmap.csv";
  detail::write_text(res.heatmap_csv, heatmap_csv_text(res.report, comments));
  res.tests_csv = cfg.output_dir / "significance.csv";
  detail::write_text(res.tests_csv, tests_csv_text(res.report, comments));

  for (Sense sense : {Sense::Contrast, Sense::Concession}) {
    for (Explicitness expl : {Explicitness::Explicit, Explicitness::Implicit}) {
      auto it = res.report.groups.find({sense, expl});
      std::string label = group_label(sense, expl);
      if (it == res.report.groups.end() || it->second.empty()) {
        log << "heatmap skipped (no relations): " << label << "\n";
        continue;
      }
      HeatmapGrid grid = heatmap(it->second, label);
      std::string stem = to_lower(label);
      for (char& c : stem) {
        if (c == '-') c = '_';
      }
      std::filesystem::path file =
          cfg.output_dir / ("heatmap_" + stem + ".svg");
      detail::write_text(file,
                         svg::heatmap_chart(grid, cfg.heatmap_cap, comments));
      res.svg_files.push_back(file);
    }
  }

  if (cfg.dump_vectors) {
    RepresentedCorpus all = represent_corpus(
        in.corpus, lex, in.db, ablation_mask(lex, MaskKind::All));
    std::ostringstream dump;
    dump_vectors(dump, all.relations);
    detail::write_text(cfg.output_dir / "vectors.jsonl", dump.str());
  }

  log << "match report: " << res.heatmap_csv.string() << ", "
      << res.tests_csv.string() << ", " << res.svg_files.size()
      << " heatmaps\n";
  return res;
}

struct GenFixtureResult {
  std::filesystem::path corpus_file;
  std::filesystem::path wndb_dir;
  int relations = 0;
};

// gen-fixture: a synthetic corpus plus a mini database, both deterministic
// for a given seed.
inline GenFixtureResult cmd_gen_fixture(const RunConfig& cfg,
                                        std::ostream& log = std::cout) {
  std::filesystem::create_directories(cfg.output_dir);
  FixtureSpec spec;
  spec.seed = cfg.seed;
  spec.relations = cfg.fixture_relations;
  spec.a_count = cfg.fixture_a_count;
  spec.shift = cfg.fixture_shift;

  GenFixtureResult res;
  res.corpus_file = cfg.output_dir / "corpus.jsonl";
  res.wndb_dir = cfg.output_dir / "wndb";
  std::vector<RelationRecord> records =
      generate_fixture(spec, res.corpus_file, res.wndb_dir);
  res.relations = static_cast<int>(records.size());
  log << "fixture: " << res.relations << " relations in "
      << res.corpus_file.string() << ", database in " << res.wndb_dir.string()
      << "\n";
  return res;
}

}  // namespace synant

#endif  // SYNANT_COMMANDS_HPP
