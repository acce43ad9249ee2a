#ifndef SYNANT_VECTORIZE_HPP
#define SYNANT_VECTORIZE_HPP

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "synant/corpus.hpp"
#include "synant/lexicon.hpp"
#include "synant/wordnet.hpp"

namespace synant {

// Signed sparse integer vector over lexicon set indices. Stored
// coordinates are nonzero; a missing index means 0.
struct ArgumentVector {
  int dimension = 0;
  std::map<int, int> coords;

  bool is_zero() const { return coords.empty(); }
  int at(int index) const {
    auto it = coords.find(index);
    return it == coords.end() ? 0 : it->second;
  }
  auto operator<=>(const ArgumentVector&) const = default;
};

struct RelationVectors {
  std::string id;
  ArgumentVector r1;
  ArgumentVector r2;
  bool discarded = false;  // both arguments all-zero under the All mask
};

// Coordinate j of the representation is (# distinct argument types in the
// set's right side) - (# in its left side); each (lemma, POS) type counts
// once per set per side.
inline ArgumentVector vectorize(const std::vector<Token>& tokens,
                                const Lexicon& lexicon,
                                const LexicalDatabase& db) {
  std::set<LemmaPos> types;
  for (const Token& tok : tokens) {
    if (tok.surface.find('_') != std::string::npos) continue;
    for (Pos pos : kAllPos) {
      if (auto lemma = morphy(tok.surface, pos, db)) {
        types.insert(LemmaPos{*lemma, pos});
      }
    }
  }
  ArgumentVector v;
  v.dimension = lexicon.m();
  for (const LemmaPos& key : types) {
    for (auto [index, side] : locate(lexicon, key.first, key.second)) {
      v.coords[index] += side == Side::Left ? -1 : 1;
    }
  }
  std::erase_if(v.coords, [](const auto& kv) { return kv.second == 0; });
  return v;
}

// Restrict to the mask's kept indices and re-base densely: the k-th kept
// index (ascending) becomes coordinate k.
inline ArgumentVector project(const ArgumentVector& v,
                              const AblationMask& mask) {
  if (v.dimension != mask.source_dimension) {
    throw std::invalid_argument(
        "project: vector dimension " + std::to_string(v.dimension) +
        " does not match mask dimension " +
        std::to_string(mask.source_dimension));
  }
  ArgumentVector out;
  out.dimension = static_cast<int>(mask.kept.size());
  int rebased = 0;
  for (int orig : mask.kept) {
    ++rebased;
    if (int val = v.at(orig); val != 0) out.coords[rebased] = val;
  }
  return out;
}

struct RetentionStats {
  int contrast_total = 0, contrast_retained = 0;
  int concession_total = 0, concession_retained = 0;
};

struct RepresentedCorpus {
  std::vector<RelationVectors> relations;  // input order, one per record
  RetentionStats retention;
};

// Vectorize both arguments of every record under the All mask, flag
// records whose two vectors are both zero as discarded, then project the
// requested mask. Output order follows input order.
inline RepresentedCorpus represent_corpus(
    const std::vector<RelationRecord>& corpus, const Lexicon& lexicon,
    const LexicalDatabase& db, const AblationMask& mask) {
  RepresentedCorpus out;
  for (const RelationRecord& r : corpus) {
    RelationVectors rv;
    rv.id = r.id;
    ArgumentVector v1 = vectorize(tokenize(r.arg1_text), lexicon, db);
    ArgumentVector v2 = vectorize(tokenize(r.arg2_text), lexicon, db);
    rv.discarded = v1.is_zero() && v2.is_zero();
    rv.r1 = project(v1, mask);
    rv.r2 = project(v2, mask);
    if (r.sense == Sense::Contrast) {
      ++out.retention.contrast_total;
      if (!rv.discarded) ++out.retention.contrast_retained;
    } else {
      ++out.retention.concession_total;
      if (!rv.discarded) ++out.retention.concession_retained;
    }
    out.relations.push_back(std::move(rv));
  }
  return out;
}

// Debug dump, one JSON line per argument: {id, arg, coords}.
inline void dump_vectors(std::ostream& out,
                         const std::vector<RelationVectors>& relations) {
  for (const RelationVectors& rv : relations) {
    for (int argno : {1, 2}) {
      const ArgumentVector& v = argno == 1 ? rv.r1 : rv.r2;
      nlohmann::ordered_json j;
      j["id"] = rv.id;
      j["arg"] = argno;
      nlohmann::ordered_json coords = nlohmann::ordered_json::object();
      for (const auto& [index, value] : v.coords) {
        coords[std::to_string(index)] = value;
      }
      j["coords"] = std::move(coords);
      out << j.dump() << "\n";
    }
  }
}

}  // namespace synant

#endif  // SYNANT_VECTORIZE_HPP
