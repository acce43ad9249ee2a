#ifndef SYNANT_CONFIG_HPP
#define SYNANT_CONFIG_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "synant/error.hpp"
#include "synant/lexicon.hpp"
#include "synant/matchstats.hpp"
#include "synant/strutil.hpp"

namespace synant {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path wordnet_dir;
  std::filesystem::path curation;  // optional directive file
  std::filesystem::path output_dir = ".";
  std::filesystem::path lexicon;   // defaults to output_dir/lexicon.json

  bool split_explicit_implicit = false;
  bool position_tagged_nodes = false;
  ScalarMode test_scalar = ScalarMode::Total;
  int heatmap_cap = 12;
  bool export_graphs = false;
  bool dump_vectors = false;

  // fixture generation
  unsigned long seed = 42;
  int fixture_relations = 400;
  int fixture_a_count = 120;
  bool fixture_shift = true;

  std::filesystem::path lexicon_path() const {
    return lexicon.empty() ? output_dir / "lexicon.json" : lexicon;
  }
};

namespace detail {

inline bool parse_bool(const std::string& key, const std::string& value) {
  std::string v = to_lower(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("bad boolean for " + key + ": \"" + value + "\"");
}

inline long parse_int(const std::string& key, const std::string& value) {
  long v = 0;
  auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    throw ConfigError("bad integer for " + key + ": \"" + value + "\"");
  }
  return v;
}

inline ScalarMode parse_scalar_mode(const std::string& value) {
  if (value == "total") return ScalarMode::Total;
  if (value == "syn") return ScalarMode::SynOnly;
  if (value == "ant") return ScalarMode::AntOnly;
  throw ConfigError("bad test_scalar \"" + value +
                    "\" (expected total, syn, or ant)");
}

}  // namespace detail

inline void apply_config_entry(RunConfig& cfg, const std::string& key,
                               const std::string& value) {
  using detail::parse_bool;
  using detail::parse_int;
  if (key == "corpus") cfg.corpus = value;
  else if (key == "wordnet_dir") cfg.wordnet_dir = value;
  else if (key == "curation") cfg.curation = value;
  else if (key == "output_dir") cfg.output_dir = value;
  else if (key == "lexicon") cfg.lexicon = value;
  else if (key == "split_explicit_implicit")
    cfg.split_explicit_implicit = parse_bool(key, value);
  else if (key == "position_tagged_nodes")
    cfg.position_tagged_nodes = parse_bool(key, value);
  else if (key == "test_scalar") cfg.test_scalar = detail::parse_scalar_mode(value);
  else if (key == "heatmap_cap") cfg.heatmap_cap = static_cast<int>(parse_int(key, value));
  else if (key == "export_graphs") cfg.export_graphs = parse_bool(key, value);
  else if (key == "dump_vectors") cfg.dump_vectors = parse_bool(key, value);
  else if (key == "seed")
    cfg.seed = static_cast<unsigned long>(parse_int(key, value));
  else if (key == "fixture_relations")
    cfg.fixture_relations = static_cast<int>(parse_int(key, value));
  else if (key == "fixture_a_count")
    cfg.fixture_a_count = static_cast<int>(parse_int(key, value));
  else if (key == "fixture_shift") cfg.fixture_shift = parse_bool(key, value);
  else throw ConfigError("unknown config key \"" + key + "\"");
}

// Flat `key = value` file; '#' comments and blank lines allowed.
inline void load_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected key = value");
    }
    std::string key(trim(t.substr(0, eq)));
    std::string value(trim(t.substr(eq + 1)));
    try {
      apply_config_entry(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": " +
                        e.what());
    }
  }
}

// Environment overrides: SYNANT_<KEY> with the config key upper-cased,
// e.g. SYNANT_WORDNET_DIR. Applied between the config file and CLI flags.
inline void apply_env_overrides(RunConfig& cfg) {
  static const char* keys[] = {
      "corpus", "wordnet_dir", "curation", "output_dir", "lexicon",
      "split_explicit_implicit", "position_tagged_nodes", "test_scalar",
      "heatmap_cap", "export_graphs", "dump_vectors", "seed",
      "fixture_relations", "fixture_a_count", "fixture_shift"};
  for (const char* key : keys) {
    std::string env = "SYNANT_";
    for (const char* c = key; *c; ++c) {
      env += *c == '_' ? '_' : static_cast<char>(*c - 'a' + 'A');
    }
    if (const char* value = std::getenv(env.c_str())) {
      apply_config_entry(cfg, key, value);
    }
  }
}

}  // namespace synant

#endif  // SYNANT_CONFIG_HPP
