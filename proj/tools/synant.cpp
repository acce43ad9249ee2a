// Command-line front end: build-lexicon, phi, match, gen-fixture.
// Exit codes: 0 success, 1 data error, 2 configuration error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "synant/commands.hpp"
#include "synant/config.hpp"
#include "synant/error.hpp"

namespace {

struct Overrides {
  std::optional<std::string> config;
  std::optional<std::string> corpus, wordnet_dir, curation, output_dir, lexicon;
  std::optional<bool> split, position_tagged, export_graphs, dump_vectors,
      fixture_shift;
  std::optional<std::string> test_scalar;
  std::optional<int> heatmap_cap, fixture_relations, fixture_a_count;
  std::optional<long> seed;
};

void add_common_options(CLI::App* cmd, Overrides& ov) {
  cmd->add_option("--config", ov.config, "flat key = value config file");
  cmd->add_option("--corpus", ov.corpus, "relation corpus (JSON lines)");
  cmd->add_option("--wordnet-dir", ov.wordnet_dir,
                  "directory with index.*/data.*/*.exc files");
  cmd->add_option("--output-dir", ov.output_dir, "where outputs are written");
  cmd->add_option("--lexicon", ov.lexicon,
                  "lexicon JSON (default: <output-dir>/lexicon.json)");
}

synant::RunConfig assemble(const Overrides& ov) {
  synant::RunConfig cfg;
  if (ov.config) synant::load_config_file(cfg, *ov.config);
  synant::apply_env_overrides(cfg);
  auto set = [&](const char* key, const auto& opt) {
    if (opt) synant::apply_config_entry(cfg, key, *opt);
  };
  set("corpus", ov.corpus);
  set("wordnet_dir", ov.wordnet_dir);
  set("curation", ov.curation);
  set("output_dir", ov.output_dir);
  set("lexicon", ov.lexicon);
  set("test_scalar", ov.test_scalar);
  if (ov.split) cfg.split_explicit_implicit = *ov.split;
  if (ov.position_tagged) cfg.position_tagged_nodes = *ov.position_tagged;
  if (ov.export_graphs) cfg.export_graphs = *ov.export_graphs;
  if (ov.dump_vectors) cfg.dump_vectors = *ov.dump_vectors;
  if (ov.fixture_shift) cfg.fixture_shift = *ov.fixture_shift;
  if (ov.heatmap_cap) cfg.heatmap_cap = *ov.heatmap_cap;
  if (ov.fixture_relations) cfg.fixture_relations = *ov.fixture_relations;
  if (ov.fixture_a_count) cfg.fixture_a_count = *ov.fixture_a_count;
  if (ov.seed) cfg.seed = static_cast<unsigned long>(*ov.seed);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "synonym/antonym analysis of contrast and concession discourse "
      "relations"};
  app.set_version_flag("--version", synant::kToolVersion);
  app.require_subcommand(1);

  Overrides ov;

  CLI::App* build = app.add_subcommand(
      "build-lexicon", "build the POS-partitioned synonym/antonym lexicon");
  add_common_options(build, ov);
  build->add_option("--curation", ov.curation,
                    "curation directive file (merge/delete lines)");

  CLI::App* phi = app.add_subcommand(
      "phi", "knowledge-graph phi report (CSV + bar charts)");
  add_common_options(phi, ov);
  phi->add_flag("--split-explicit-implicit", [&](size_t) { ov.split = true; },
                "build separate graphs for explicit and implicit relations");
  phi->add_flag("--position-tagged-nodes",
                [&](size_t) { ov.position_tagged = true; },
                "keep arg1/arg2 vectors distinct when collapsing nodes");
  phi->add_flag("--export-graphs", [&](size_t) { ov.export_graphs = true; },
                "also write per-connective edge lists and node tables");

  CLI::App* match = app.add_subcommand(
      "match", "intra-relation match counts (heatmaps + significance tests)");
  add_common_options(match, ov);
  match->add_option("--test-scalar", ov.test_scalar,
                    "per-relation scalar: total, syn, or ant");
  match->add_option("--heatmap-cap", ov.heatmap_cap,
                    "fold heatmap cells beyond this value");
  match->add_flag("--dump-vectors", [&](size_t) { ov.dump_vectors = true; },
                  "also write vectors.jsonl with per-argument coordinates");

  CLI::App* gen = app.add_subcommand(
      "gen-fixture", "generate a synthetic corpus and mini database");
  gen->add_option("--config", ov.config, "flat key = value config file");
  gen->add_option("--output-dir", ov.output_dir, "where outputs are written");
  gen->add_option("--seed", ov.seed, "random seed");
  gen->add_option("--relations", ov.fixture_relations,
                  "number of relations to generate");
  gen->add_option("--a-count", ov.fixture_a_count,
                  "instances of the leading connective per sense");
  gen->add_option("--shift", ov.fixture_shift,
                  "raise explicit-concession match counts (true/false)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    synant::RunConfig cfg = assemble(ov);
    if (build->parsed()) {
      synant::cmd_build_lexicon(cfg);
    } else if (phi->parsed()) {
      synant::cmd_phi(cfg);
    } else if (match->parsed()) {
      synant::cmd_match(cfg);
    } else if (gen->parsed()) {
      synant::cmd_gen_fixture(cfg);
    }
  } catch (const synant::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const synant::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
