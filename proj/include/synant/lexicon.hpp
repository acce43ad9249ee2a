#ifndef SYNANT_LEXICON_HPP
#define SYNANT_LEXICON_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "synant/corpus.hpp"
#include "synant/error.hpp"
#include "synant/pos.hpp"
#include "synant/wordnet.hpp"

namespace synant {

enum class Side { Left, Right };

inline char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

// One two-sided set: same-side members are synonyms, opposite-side members
// antonyms. All members share the set's POS. left is never empty.
struct SynAntSet {
  int index = 0;  // 1-based position in the lexicon
  Pos pos = Pos::Adjective;
  std::set<std::string> left;
  std::set<std::string> right;
};

struct Provenance {
  std::string corpus_checksum;
  std::string wordnet_checksum;
  std::string curation_checksum;  // "none" when no directive file was used
  std::string tool_version;
};

// The ordered collection of all sets, grouped into POS blocks:
// [1, n1] adjectives, (n1, n2] nouns, (n2, n3] verbs, (n3, m] adverbs.
struct Lexicon {
  std::vector<SynAntSet> sets;
  int n1 = 0, n2 = 0, n3 = 0;
  std::map<LemmaPos, std::vector<std::pair<int, Side>>> membership;
  Provenance provenance;

  int m() const { return static_cast<int>(sets.size()); }
};

// All (set index, side) pairs for a lemma under one POS, ascending.
inline std::vector<std::pair<int, Side>> locate(const Lexicon& lex,
                                                const std::string& lemma,
                                                Pos pos) {
  auto it = lex.membership.find(LemmaPos{lemma, pos});
  if (it == lex.membership.end()) return {};
  return it->second;
}

inline std::map<LemmaPos, std::vector<std::pair<int, Side>>>
build_membership(const std::vector<SynAntSet>& sets) {
  std::map<LemmaPos, std::vector<std::pair<int, Side>>> m;
  for (const SynAntSet& s : sets) {
    for (const std::string& w : s.left) {
      m[LemmaPos{w, s.pos}].emplace_back(s.index, Side::Left);
    }
    for (const std::string& w : s.right) {
      m[LemmaPos{w, s.pos}].emplace_back(s.index, Side::Right);
    }
  }
  for (auto& [key, hits] : m) std::sort(hits.begin(), hits.end());
  return m;
}

namespace detail {

// Reorder sets into POS blocks (stable within a block), assign 1-based
// indices, recompute boundaries and the membership index.
inline Lexicon finalize_lexicon(std::vector<SynAntSet> sets) {
  std::stable_sort(sets.begin(), sets.end(),
                   [](const SynAntSet& a, const SynAntSet& b) {
                     return static_cast<int>(a.pos) < static_cast<int>(b.pos);
                   });
  Lexicon lex;
  lex.sets = std::move(sets);
  for (size_t i = 0; i < lex.sets.size(); ++i) {
    lex.sets[i].index = static_cast<int>(i) + 1;
  }
  auto count_pos = [&](Pos p) {
    return static_cast<int>(
        std::count_if(lex.sets.begin(), lex.sets.end(),
                      [p](const SynAntSet& s) { return s.pos == p; }));
  };
  lex.n1 = count_pos(Pos::Adjective);
  lex.n2 = lex.n1 + count_pos(Pos::Noun);
  lex.n3 = lex.n2 + count_pos(Pos::Verb);
  lex.membership = build_membership(lex.sets);
  return lex;
}

// Union `words` into one side of `set`, skipping lemmas already present on
// the opposite side (existing membership wins) so that left/right stay
// disjoint and no lemma appears twice in the set.
inline void union_into_side(SynAntSet& set, Side side,
                            const std::set<std::string>& words) {
  std::set<std::string>& dst = side == Side::Left ? set.left : set.right;
  std::set<std::string>& other = side == Side::Left ? set.right : set.left;
  for (const std::string& w : words) {
    if (other.count(w)) continue;
    dst.insert(w);
  }
}

}  // namespace detail

// Scan (lemma, POS) occurrences in first-occurrence corpus order. A word
// found in no set opens a new one from its retrieval result (syn -> left,
// ant -> right). A word found on some set's left side merges its synonyms
// into that left and antonyms into that right; found on a right side it
// merges mirrored. When a word sits in several sets, the lowest-indexed
// one is extended. Afterwards sets are grouped into POS blocks.
inline Lexicon build_lexicon(const std::vector<RelationRecord>& corpus,
                             const LexicalDatabase& db) {
  Vocabulary vocab = build_vocabulary(corpus, db);

  std::vector<SynAntSet> sets;  // creation order; index fields unset
  std::map<LemmaPos, std::vector<std::pair<size_t, Side>>> where;
  std::set<LemmaPos> seen;

  auto register_word = [&](const std::string& w, Pos pos, size_t set_idx,
                           Side side) {
    auto& hits = where[LemmaPos{w, pos}];
    hits.emplace_back(set_idx, side);
    std::sort(hits.begin(), hits.end());
  };

  auto process = [&](const std::string& lemma, Pos pos) {
    auto key = LemmaPos{lemma, pos};
    if (!seen.insert(key).second) return;
    SynAntResult ret = retrieve(lemma, pos, vocab, db);
    auto hit = where.find(key);
    if (hit == where.end() || hit->second.empty()) {
      SynAntSet s;
      s.pos = pos;
      s.left = ret.syn;
      s.right = ret.ant;
      sets.push_back(std::move(s));
      size_t idx = sets.size() - 1;
      for (const std::string& w : sets[idx].left) {
        register_word(w, pos, idx, Side::Left);
      }
      for (const std::string& w : sets[idx].right) {
        register_word(w, pos, idx, Side::Right);
      }
      return;
    }
    // Found on a left side: syn extends left, ant extends right. Found on
    // a right side: mirrored. Existing members never move.
    auto [idx, side] = hit->second.front();
    SynAntSet& target = sets[idx];
    const auto& into_left = side == Side::Left ? ret.syn : ret.ant;
    const auto& into_right = side == Side::Left ? ret.ant : ret.syn;
    for (const std::string& w : into_left) {
      if (target.right.count(w) || target.left.count(w)) continue;
      target.left.insert(w);
      register_word(w, pos, idx, Side::Left);
    }
    for (const std::string& w : into_right) {
      if (target.left.count(w) || target.right.count(w)) continue;
      target.right.insert(w);
      register_word(w, pos, idx, Side::Right);
    }
  };

  for (const RelationRecord& r : corpus) {
    for (const std::string* text : {&r.arg1_text, &r.arg2_text}) {
      for (const Token& tok : tokenize(*text)) {
        if (tok.surface.find('_') != std::string::npos) continue;
        for (Pos pos : kAllPos) {
          if (auto lemma = morphy(tok.surface, pos, db)) process(*lemma, pos);
        }
      }
    }
  }
  return detail::finalize_lexicon(std::move(sets));
}

struct CurationDirective {
  enum class Kind { Merge, Delete };
  Kind kind = Kind::Delete;
  int target = 0;  // merge target / delete victim
  int source = 0;  // merged-away set (Merge only)
  bool flip = false;
  int line = 0;
};

// Directive file: `merge I J [flip]` / `delete I`, '#' comments. Indices
// refer to the lexicon as passed to curate (before any automatic rule).
inline std::vector<CurationDirective> parse_curation_directives(
    std::istream& in) {
  std::vector<CurationDirective> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> tok = split_ws(t);
    CurationDirective d;
    d.line = lineno;
    auto to_index = [&](const std::string& s) {
      long v = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v < 1) {
        throw DataError("curation line " + std::to_string(lineno) +
                        ": bad set index \"" + s + "\"");
      }
      return static_cast<int>(v);
    };
    if (tok[0] == "merge" && (tok.size() == 3 || tok.size() == 4)) {
      d.kind = CurationDirective::Kind::Merge;
      d.target = to_index(tok[1]);
      d.source = to_index(tok[2]);
      if (tok.size() == 4) {
        if (tok[3] != "flip") {
          throw DataError("curation line " + std::to_string(lineno) +
                          ": expected \"flip\", got \"" + tok[3] + "\"");
        }
        d.flip = true;
      }
    } else if (tok[0] == "delete" && tok.size() == 2) {
      d.kind = CurationDirective::Kind::Delete;
      d.target = to_index(tok[1]);
    } else {
      throw DataError("curation line " + std::to_string(lineno) +
                      ": unrecognized directive \"" + std::string(t) + "\"");
    }
    out.push_back(d);
  }
  return out;
}

// Deterministic redundancy reduction, then user directives:
//   (a) drop a singleton-pair set whose two sides are contained, in either
//       orientation, in a strictly larger set of the same POS;
//   (b) collapse sets with identical unordered side pairs onto the
//       lowest-indexed one;
//   (c) drop sets with a singleton left and empty right.
// Directive indices refer to the input lexicon; a directive naming a set
// that does not exist (or was already removed) is an error.
inline Lexicon curate(const Lexicon& input,
                      const std::vector<CurationDirective>& directives = {}) {
  std::vector<SynAntSet> sets = input.sets;
  std::vector<bool> alive(sets.size(), true);

  // (a) singleton pairs subsumed by a larger set
  for (size_t i = 0; i < sets.size(); ++i) {
    const SynAntSet& s = sets[i];
    if (s.left.size() != 1 || s.right.size() != 1) continue;
    const std::string& l = *s.left.begin();
    const std::string& r = *s.right.begin();
    for (size_t k = 0; k < sets.size(); ++k) {
      if (k == i || sets[k].pos != s.pos) continue;
      const SynAntSet& w = sets[k];
      if (w.left.size() + w.right.size() <= 2) continue;
      bool straight = w.left.count(l) && w.right.count(r);
      bool flipped = w.right.count(l) && w.left.count(r);
      if (straight || flipped) {
        alive[i] = false;
        break;
      }
    }
  }

  // (b) identical unordered side pairs
  std::map<std::tuple<Pos, std::set<std::string>, std::set<std::string>>,
           size_t>
      canon;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (!alive[i]) continue;
    const SynAntSet& s = sets[i];
    auto key = s.left <= s.right
                   ? std::make_tuple(s.pos, s.left, s.right)
                   : std::make_tuple(s.pos, s.right, s.left);
    auto [it, inserted] = canon.emplace(std::move(key), i);
    if (!inserted) alive[i] = false;  // keep the lowest-indexed set
  }

  // (c) pure self-synonym noise
  for (size_t i = 0; i < sets.size(); ++i) {
    if (alive[i] && sets[i].left.size() == 1 && sets[i].right.empty()) {
      alive[i] = false;
    }
  }

  for (const CurationDirective& d : directives) {
    auto check = [&](int index1) -> size_t {
      if (index1 < 1 || index1 > static_cast<int>(sets.size()) ||
          !alive[static_cast<size_t>(index1 - 1)]) {
        throw DataError("curation line " + std::to_string(d.line) +
                        ": set " + std::to_string(index1) + " does not exist");
      }
      return static_cast<size_t>(index1 - 1);
    };
    if (d.kind == CurationDirective::Kind::Delete) {
      alive[check(d.target)] = false;
      continue;
    }
    size_t ti = check(d.target);
    size_t si = check(d.source);
    if (ti == si) {
      throw DataError("curation line " + std::to_string(d.line) +
                      ": cannot merge a set into itself");
    }
    if (sets[ti].pos != sets[si].pos) {
      throw DataError("curation line " + std::to_string(d.line) +
                      ": sets " + std::to_string(d.target) + " and " +
                      std::to_string(d.source) + " have different POS");
    }
    std::set<std::string> src_left = sets[si].left;
    std::set<std::string> src_right = sets[si].right;
    if (d.flip) std::swap(src_left, src_right);
    detail::union_into_side(sets[ti], Side::Left, src_left);
    detail::union_into_side(sets[ti], Side::Right, src_right);
    alive[si] = false;
  }

  std::vector<SynAntSet> kept;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (alive[i]) kept.push_back(sets[i]);
  }
  Lexicon out = detail::finalize_lexicon(std::move(kept));
  out.provenance = input.provenance;
  return out;
}

enum class MaskKind { All, NoAdjective, NoNoun, NoVerb, NoAdverb };

inline std::string_view mask_name(MaskKind k) {
  switch (k) {
    case MaskKind::All: return "all";
    case MaskKind::NoAdjective: return "all-aj";
    case MaskKind::NoNoun: return "all-n";
    case MaskKind::NoVerb: return "all-v";
    case MaskKind::NoAdverb: return "all-av";
  }
  return "?";
}

inline constexpr std::array<MaskKind, 5> kAllMasks = {
    MaskKind::All, MaskKind::NoAdjective, MaskKind::NoNoun, MaskKind::NoVerb,
    MaskKind::NoAdverb};

struct AblationMask {
  MaskKind kind = MaskKind::All;
  int source_dimension = 0;
  std::vector<int> kept;  // ascending original set indices
};

// Kept index ranges per kind: NoAdjective (n1, m]; NoNoun [1, n1] u (n2, m];
// NoVerb [1, n2] u (n3, m]; NoAdverb [1, n3]; All [1, m].
inline AblationMask ablation_mask(const Lexicon& lex, MaskKind kind) {
  AblationMask mask;
  mask.kind = kind;
  mask.source_dimension = lex.m();
  auto keep_range = [&](int lo, int hi) {  // inclusive 1-based
    for (int i = lo; i <= hi; ++i) mask.kept.push_back(i);
  };
  const int m = lex.m();
  switch (kind) {
    case MaskKind::All: keep_range(1, m); break;
    case MaskKind::NoAdjective: keep_range(lex.n1 + 1, m); break;
    case MaskKind::NoNoun:
      keep_range(1, lex.n1);
      keep_range(lex.n2 + 1, m);
      break;
    case MaskKind::NoVerb:
      keep_range(1, lex.n2);
      keep_range(lex.n3 + 1, m);
      break;
    case MaskKind::NoAdverb: keep_range(1, lex.n3); break;
  }
  return mask;
}

// The ablated lexicon as a first-class Lexicon: kept sets re-indexed
// densely in ascending original order.
inline Lexicon restrict_lexicon(const Lexicon& lex, const AblationMask& mask) {
  if (mask.source_dimension != lex.m()) {
    throw std::invalid_argument("restrict_lexicon: mask dimension " +
                                std::to_string(mask.source_dimension) +
                                " does not match lexicon size " +
                                std::to_string(lex.m()));
  }
  std::vector<SynAntSet> kept;
  for (int idx : mask.kept) kept.push_back(lex.sets[static_cast<size_t>(idx - 1)]);
  Lexicon out = detail::finalize_lexicon(std::move(kept));
  out.provenance = lex.provenance;
  return out;
}

inline nlohmann::ordered_json lexicon_to_json(const Lexicon& lex) {
  nlohmann::ordered_json j;
  j["boundaries"] = {{"n1", lex.n1}, {"n2", lex.n2}, {"n3", lex.n3},
                     {"m", lex.m()}};
  if (!lex.provenance.wordnet_checksum.empty()) {
    j["provenance"] = {{"corpus", lex.provenance.corpus_checksum},
                       {"wordnet", lex.provenance.wordnet_checksum},
                       {"curation", lex.provenance.curation_checksum},
                       {"tool_version", lex.provenance.tool_version}};
  }
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (const SynAntSet& s : lex.sets) {
    nlohmann::ordered_json js;
    js["index"] = s.index;
    js["pos"] = std::string(pos_name(s.pos));
    js["left"] = s.left;
    js["right"] = s.right;
    sets.push_back(std::move(js));
  }
  j["sets"] = std::move(sets);
  return j;
}

inline void write_lexicon(std::ostream& out, const Lexicon& lex) {
  out << lexicon_to_json(lex).dump(2) << "\n";
}

inline Lexicon read_lexicon(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("lexicon file: invalid JSON: ") + e.what());
  }
  if (!j.contains("sets") || !j["sets"].is_array()) {
    throw DataError("lexicon file: missing \"sets\" array");
  }
  std::vector<SynAntSet> sets;
  for (const auto& js : j["sets"]) {
    SynAntSet s;
    auto pos = pos_from_name(js.value("pos", ""));
    if (!pos) {
      throw DataError("lexicon file: bad pos \"" + js.value("pos", "") + "\"");
    }
    s.pos = *pos;
    for (const auto& w : js.value("left", nlohmann::json::array())) {
      s.left.insert(w.get<std::string>());
    }
    for (const auto& w : js.value("right", nlohmann::json::array())) {
      s.right.insert(w.get<std::string>());
    }
    sets.push_back(std::move(s));
  }
  Lexicon lex = detail::finalize_lexicon(std::move(sets));
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    lex.provenance.corpus_checksum = p.value("corpus", "");
    lex.provenance.wordnet_checksum = p.value("wordnet", "");
    lex.provenance.curation_checksum = p.value("curation", "");
    lex.provenance.tool_version = p.value("tool_version", "");
  }
  if (j.contains("boundaries")) {
    const auto& b = j["boundaries"];
    if (b.value("n1", lex.n1) != lex.n1 || b.value("n2", lex.n2) != lex.n2 ||
        b.value("n3", lex.n3) != lex.n3 || b.value("m", lex.m()) != lex.m()) {
      throw DataError("lexicon file: boundaries disagree with the set list");
    }
  }
  return lex;
}

}  // namespace synant

#endif  // SYNANT_LEXICON_HPP
