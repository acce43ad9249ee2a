#ifndef SYNANT_WORDNET_HPP
#define SYNANT_WORDNET_HPP

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "synant/checksum.hpp"
#include "synant/corpus.hpp"
#include "synant/error.hpp"
#include "synant/pos.hpp"
#include "synant/strutil.hpp"

namespace synant {

// A lexical antonym pointer ("!"). Word numbers are 1-based positions in
// the owning/target synset's lemma list; 0 means the whole synset.
struct AntonymLink {
  int source_word = 0;
  Pos target_pos = Pos::Noun;
  long target_offset = 0;
  int target_word = 0;
};

struct Synset {
  Pos pos = Pos::Noun;
  long offset = 0;
  std::vector<std::string> lemmas;  // lowercase, underscores for spaces
  std::vector<AntonymLink> antonym_links;
};

using LemmaPos = std::pair<std::string, Pos>;

struct Vocabulary {
  std::set<LemmaPos> entries;

  bool contains(const std::string& lemma, Pos pos) const {
    return entries.count(LemmaPos{lemma, pos}) > 0;
  }
  size_t size() const { return entries.size(); }
};

// In-memory form of the four index.pos/data.pos/pos.exc file triples.
// Immutable after load; queries are read-only.
class LexicalDatabase {
 public:
  std::array<std::map<std::string, std::vector<long>>, 4> index;
  std::array<std::map<long, Synset>, 4> synsets;
  std::array<std::map<std::string, std::vector<std::string>>, 4> exceptions;
  std::string checksum;  // fingerprint of the source files

  const std::map<std::string, std::vector<long>>& index_for(Pos p) const {
    return index[static_cast<size_t>(p)];
  }
  bool has_lemma(const std::string& lemma, Pos p) const {
    return index_for(p).count(lemma) > 0;
  }
  const Synset* find_synset(Pos p, long offset) const {
    const auto& m = synsets[static_cast<size_t>(p)];
    auto it = m.find(offset);
    return it == m.end() ? nullptr : &it->second;
  }
};

namespace detail {

inline bool is_header_line(const std::string& line) {
  return line.size() >= 2 && line[0] == ' ' && line[1] == ' ';
}

[[noreturn]] inline void parse_fail(const std::filesystem::path& file,
                                    int lineno, const std::string& what) {
  throw DataError(file.string() + ":" + std::to_string(lineno) + ": " + what);
}

inline long parse_long(const std::string& tok, int base,
                       const std::filesystem::path& file, int lineno) {
  long v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v, base);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    parse_fail(file, lineno, "bad number \"" + tok + "\"");
  }
  return v;
}

// Adjective lemmas may carry a syntactic marker: "large(p)" -> "large".
inline std::string strip_adj_marker(const std::string& w) {
  auto p = w.find('(');
  if (p != std::string::npos && w.back() == ')') return w.substr(0, p);
  return w;
}

// index.pos line:
//   lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt tagsense_cnt
//   synset_offset [synset_offset...]
inline void parse_index_file(const std::filesystem::path& file, Pos pos,
                             LexicalDatabase& db) {
  std::ifstream in(file);
  if (!in) throw DataError("missing database file: " + file.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_header_line(line) || trim(line).empty()) continue;
    std::vector<std::string> t = split_ws(line);
    if (t.size() < 6) parse_fail(file, lineno, "short index line");
    const std::string lemma = to_lower(t[0]);
    size_t k = 2;
    long synset_cnt = parse_long(t[k++], 10, file, lineno);
    long p_cnt = parse_long(t[k++], 10, file, lineno);
    k += static_cast<size_t>(p_cnt);  // pointer symbols
    k += 2;                           // sense_cnt, tagsense_cnt
    if (k + static_cast<size_t>(synset_cnt) > t.size()) {
      parse_fail(file, lineno, "offset list shorter than synset_cnt");
    }
    std::vector<long>& offsets = db.index[static_cast<size_t>(pos)][lemma];
    for (long i = 0; i < synset_cnt; ++i) {
      offsets.push_back(parse_long(t[k + static_cast<size_t>(i)], 10, file,
                                   lineno));
    }
  }
}

// data.pos line:
//   synset_offset lex_filenum ss_type w_cnt word lex_id [word lex_id...]
//   p_cnt [ptr...] [frames...] | gloss
// where each ptr is: pointer_symbol synset_offset pos source/target.
// Only "!" pointers are kept; frames and glosses are skipped.
inline void parse_data_file(const std::filesystem::path& file, Pos pos,
                            LexicalDatabase& db) {
  std::ifstream in(file);
  if (!in) throw DataError("missing database file: " + file.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_header_line(line) || trim(line).empty()) continue;
    std::string body = line;
    if (auto bar = body.find('|'); bar != std::string::npos) {
      body = body.substr(0, bar);
    }
    std::vector<std::string> t = split_ws(body);
    if (t.size() < 5) parse_fail(file, lineno, "short data line");

    Synset syn;
    syn.offset = parse_long(t[0], 10, file, lineno);
    auto ss = pos_from_char(t[2].empty() ? '?' : t[2][0]);
    if (!ss || *ss != pos) {
      parse_fail(file, lineno, "ss_type \"" + t[2] + "\" in " +
                                   std::string(pos_file_suffix(pos)) +
                                   " data file");
    }
    syn.pos = pos;

    size_t k = 3;
    long w_cnt = parse_long(t[k++], 16, file, lineno);
    if (w_cnt < 1) parse_fail(file, lineno, "w_cnt < 1");
    for (long i = 0; i < w_cnt; ++i) {
      if (k + 1 >= t.size()) parse_fail(file, lineno, "truncated word list");
      std::string w = to_lower(t[k]);
      if (pos == Pos::Adjective) w = strip_adj_marker(w);
      syn.lemmas.push_back(w);
      k += 2;  // word, lex_id
    }

    if (k >= t.size()) parse_fail(file, lineno, "missing p_cnt");
    long p_cnt = parse_long(t[k++], 10, file, lineno);
    for (long i = 0; i < p_cnt; ++i) {
      if (k + 4 > t.size()) parse_fail(file, lineno, "truncated pointer list");
      const std::string& symbol = t[k];
      const std::string& offset_tok = t[k + 1];
      const std::string& pos_tok = t[k + 2];
      const std::string& st_tok = t[k + 3];
      k += 4;
      if (symbol != "!") continue;
      auto tpos = pos_from_char(pos_tok.empty() ? '?' : pos_tok[0]);
      if (!tpos) parse_fail(file, lineno, "bad pointer pos \"" + pos_tok + "\"");
      if (st_tok.size() != 4) {
        parse_fail(file, lineno, "bad source/target \"" + st_tok + "\"");
      }
      AntonymLink link;
      link.source_word =
          static_cast<int>(parse_long(st_tok.substr(0, 2), 16, file, lineno));
      link.target_word =
          static_cast<int>(parse_long(st_tok.substr(2, 2), 16, file, lineno));
      link.target_pos = *tpos;
      link.target_offset = parse_long(offset_tok, 10, file, lineno);
      if (link.source_word > static_cast<int>(syn.lemmas.size())) {
        parse_fail(file, lineno, "antonym source word out of range");
      }
      syn.antonym_links.push_back(link);
    }
    db.synsets[static_cast<size_t>(pos)][syn.offset] = std::move(syn);
  }
}

// pos.exc line: inflected base [base...]
inline void parse_exception_file(const std::filesystem::path& file, Pos pos,
                                 LexicalDatabase& db) {
  std::ifstream in(file);
  if (!in) throw DataError("missing database file: " + file.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_header_line(line) || trim(line).empty()) continue;
    std::vector<std::string> t = split_ws(line);
    if (t.size() < 2) parse_fail(file, lineno, "short exception line");
    std::string inflected = to_lower(t[0]);
    auto& bases = db.exceptions[static_cast<size_t>(pos)][inflected];
    for (size_t i = 1; i < t.size(); ++i) bases.push_back(to_lower(t[i]));
  }
}

}  // namespace detail

// Load a WordNet 3.x style directory: index.{noun,verb,adj,adv},
// data.{noun,verb,adj,adv}, {noun,verb,adj,adv}.exc. Two-leading-space
// license lines are skipped. Of the pointer list only "!" is retained.
inline LexicalDatabase load_wordnet(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  LexicalDatabase db;
  std::vector<fs::path> files;
  for (Pos p : kAllPos) {
    std::string suffix(pos_file_suffix(p));
    files.push_back(dir / ("index." + suffix));
    files.push_back(dir / ("data." + suffix));
    files.push_back(dir / (suffix + ".exc"));
  }
  for (const fs::path& f : files) {
    if (!fs::exists(f)) throw DataError("missing database file: " + f.string());
  }
  for (Pos p : kAllPos) {
    std::string suffix(pos_file_suffix(p));
    detail::parse_index_file(dir / ("index." + suffix), p, db);
    detail::parse_data_file(dir / ("data." + suffix), p, db);
    detail::parse_exception_file(dir / (suffix + ".exc"), p, db);
  }
  // Every index offset must resolve to a data synset of the same POS.
  for (Pos p : kAllPos) {
    for (const auto& [lemma, offsets] : db.index_for(p)) {
      for (long off : offsets) {
        if (!db.find_synset(p, off)) {
          throw DataError("index." + std::string(pos_file_suffix(p)) +
                          ": lemma \"" + lemma + "\" references offset " +
                          std::to_string(off) + " with no data line");
        }
      }
    }
  }
  db.checksum = checksum_files(files);
  return db;
}

namespace detail {

struct MorphyRule {
  const char* suffix;
  const char* replacement;
};

inline const std::vector<MorphyRule>& morphy_rules(Pos pos) {
  static const std::vector<MorphyRule> noun = {
      {"s", ""},     {"ses", "s"},   {"xes", "x"},  {"zes", "z"},
      {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"}};
  static const std::vector<MorphyRule> verb = {
      {"s", ""},   {"ies", "y"}, {"es", "e"}, {"es", ""},
      {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""}};
  static const std::vector<MorphyRule> adj = {
      {"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}};
  static const std::vector<MorphyRule> none = {};
  switch (pos) {
    case Pos::Noun: return noun;
    case Pos::Verb: return verb;
    case Pos::Adjective: return adj;
    case Pos::Adverb: return none;
  }
  return none;
}

}  // namespace detail

// Map an inflected surface form to a base form present in the database
// index for the given POS. Search order: the surface itself, the POS
// exception map, then the detachment rules applied once. Returns nothing
// when no candidate is in the index.
inline std::optional<std::string> morphy(const std::string& surface, Pos pos,
                                         const LexicalDatabase& db) {
  if (db.has_lemma(surface, pos)) return surface;
  const auto& exc = db.exceptions[static_cast<size_t>(pos)];
  if (auto it = exc.find(surface); it != exc.end()) {
    for (const std::string& base : it->second) {
      if (db.has_lemma(base, pos)) return base;
    }
  }
  for (const auto& rule : detail::morphy_rules(pos)) {
    if (!ends_with(surface, rule.suffix)) continue;
    std::string candidate =
        surface.substr(0, surface.size() - std::string_view(rule.suffix).size()) +
        rule.replacement;
    if (candidate.empty()) continue;
    if (db.has_lemma(candidate, pos)) return candidate;
  }
  return std::nullopt;
}

// The corpus vocabulary: every (lemma, POS) pair reachable from some
// argument token via morphy. A single surface token may contribute up to
// four entries. Tokens with underscores never match (multiword lemmas are
// outside the tokenizer's reach).
inline Vocabulary build_vocabulary(const std::vector<RelationRecord>& corpus,
                                   const LexicalDatabase& db) {
  Vocabulary vocab;
  for (const RelationRecord& r : corpus) {
    for (const std::string* text : {&r.arg1_text, &r.arg2_text}) {
      for (const Token& tok : tokenize(*text)) {
        if (tok.surface.find('_') != std::string::npos) continue;
        for (Pos pos : kAllPos) {
          if (auto lemma = morphy(tok.surface, pos, db)) {
            vocab.entries.insert(LemmaPos{*lemma, pos});
          }
        }
      }
    }
  }
  return vocab;
}

struct SynAntResult {
  std::set<std::string> syn;
  std::set<std::string> ant;
};

// The retrieval function: synonyms of (w, pos) are the union of its
// synsets' lemmas; antonyms are the targets of "!" links from those
// synsets together with the full lemma sets of the target synsets. Both
// sides are restricted to the vocabulary of the query POS. syn always
// contains w; a lemma reachable on both sides stays in syn only.
inline SynAntResult retrieve(const std::string& w, Pos pos,
                             const Vocabulary& vocab,
                             const LexicalDatabase& db) {
  if (!vocab.contains(w, pos)) {
    throw std::invalid_argument("retrieve: (" + w + ", " +
                                std::string(pos_name(pos)) +
                                ") is not in the vocabulary");
  }
  SynAntResult out;
  out.syn.insert(w);
  const auto& idx = db.index_for(pos);
  auto it = idx.find(w);
  if (it == idx.end()) return out;
  for (long offset : it->second) {
    const Synset* syn = db.find_synset(pos, offset);
    if (!syn) continue;
    for (const std::string& lemma : syn->lemmas) {
      if (vocab.contains(lemma, pos)) out.syn.insert(lemma);
    }
    for (const AntonymLink& link : syn->antonym_links) {
      if (link.target_pos != pos) continue;  // sets are single-POS
      const Synset* target = db.find_synset(link.target_pos, link.target_offset);
      if (!target) continue;
      for (const std::string& lemma : target->lemmas) {
        if (vocab.contains(lemma, pos)) out.ant.insert(lemma);
      }
    }
  }
  for (const std::string& lemma : out.syn) out.ant.erase(lemma);
  return out;
}

}  // namespace synant

#endif  // SYNANT_WORDNET_HPP
