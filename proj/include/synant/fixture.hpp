#ifndef SYNANT_FIXTURE_HPP
#define SYNANT_FIXTURE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "synant/corpus.hpp"
#include "synant/error.hpp"
#include "synant/pos.hpp"

namespace synant {

// Deterministic helpers on top of mt19937_64. The standard distributions
// are implementation-defined, so byte-stable fixtures avoid them.
namespace rng {

inline int bounded(std::mt19937_64& gen, int lo, int hi) {
  return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * (1.0 / 9007199254740992.0);
}

template <typename T>
void shuffle(std::mt19937_64& gen, std::vector<T>& v) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(bounded(gen, 0, static_cast<int>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace rng

struct FixtureSpec {
  unsigned long seed = 42;
  int relations = 400;
  int a_count = 120;   // instances of the first connective per sense
  bool shift = true;   // raise explicit-concession match counts
};

namespace detail {

// Synthetic concept groups: per POS, six groups of three left (synonym)
// and two right (antonym) words. Word shapes never collide with the
// morphy suffix rules (all end in vowels).
struct ConceptGroup {
  Pos pos;
  int group;
  std::vector<std::string> left;
  std::vector<std::string> right;
  long left_offset;
  long right_offset;
};

inline std::vector<ConceptGroup> fixture_groups() {
  static const std::array<const char*, 12> syl = {
      "ba", "de", "ki", "lo", "mu", "na", "po", "ri", "su", "ta", "ve", "zo"};
  auto prefix = [](Pos p) {
    switch (p) {
      case Pos::Adjective: return "aj";
      case Pos::Noun: return "no";
      case Pos::Verb: return "vu";
      case Pos::Adverb: return "av";
    }
    return "??";
  };
  std::vector<ConceptGroup> out;
  for (Pos p : kAllPos) {
    for (int g = 0; g < 6; ++g) {
      ConceptGroup cg;
      cg.pos = p;
      cg.group = g;
      for (int j = 0; j < 3; ++j) {
        cg.left.push_back(std::string(prefix(p)) + syl[g] + syl[6 + j]);
      }
      for (int j = 0; j < 2; ++j) {
        cg.right.push_back(std::string(prefix(p)) + syl[g] + syl[9 + j]);
      }
      cg.left_offset = 100 * (g + 1);
      cg.right_offset = 100 * (g + 1) + 50;
      out.push_back(std::move(cg));
    }
  }
  return out;
}

inline std::string offset8(long v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%08ld", v);
  return buf;
}

inline void write_fixture_wndb(const std::filesystem::path& dir,
                               const std::vector<ConceptGroup>& groups) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (Pos p : kAllPos) {
    const std::string suffix(pos_file_suffix(p));
    const char pc = suffix == "adj" ? 'a' : suffix == "adv" ? 'r' : suffix[0];

    std::ofstream data(dir / ("data." + suffix));
    std::ofstream index(dir / ("index." + suffix));
    std::ofstream exc(dir / (suffix + ".exc"));
    if (!data || !index || !exc) {
      throw DataError("cannot write fixture database in " + dir.string());
    }
    data << "  1 synthetic fixture database in the WordNet 3.x layout\n";
    index << "  1 synthetic fixture database in the WordNet 3.x layout\n";

    std::map<std::string, long> lemma_offset;
    for (const ConceptGroup& cg : groups) {
      if (cg.pos != p) continue;
      auto emit = [&](long offset, const std::vector<std::string>& words,
                      long target) {
        data << offset8(offset) << " 00 " << pc << " "
             << (words.size() == 3 ? "03" : "02");
        for (const std::string& w : words) data << " " << w << " 0";
        data << " 001 ! " << offset8(target) << " " << pc << " 0101";
        if (p == Pos::Verb) data << " 01 + 02 00";
        data << " | synthetic concept group " << cg.group << "\n";
        for (const std::string& w : words) lemma_offset[w] = offset;
      };
      emit(cg.left_offset, cg.left, cg.right_offset);
      emit(cg.right_offset, cg.right, cg.left_offset);
    }
    for (const auto& [lemma, offset] : lemma_offset) {
      index << lemma << " " << pc << " 1 1 ! 1 0 " << offset8(offset) << "\n";
    }
    // irregular inflections for every word of the first group of the POS;
    // surface_form only prefixes words of that group
    for (const ConceptGroup& cg : groups) {
      if (cg.pos != p || cg.group != 0) continue;
      for (const auto* side : {&cg.left, &cg.right}) {
        for (const std::string& w : *side) exc << "irr" << w << " " << w << "\n";
      }
    }
  }
}

struct MatchPlan {
  int n_syn = 0;
  int n_ant = 0;
  bool discard = false;  // filler-only arguments
};

inline MatchPlan draw_match_plan(std::mt19937_64& gen, bool shifted) {
  MatchPlan plan;
  if (rng::unit(gen) < 0.05) {
    plan.discard = true;
    return plan;
  }
  double s = rng::unit(gen);
  plan.n_syn = s < 0.35 ? 0 : s < 0.70 ? 1 : s < 0.90 ? 2 : 3;
  double a = rng::unit(gen);
  plan.n_ant = a < 0.55 ? 0 : a < 0.85 ? 1 : 2;
  if (shifted) {
    if (rng::unit(gen) < 0.65) ++plan.n_syn;
    if (rng::unit(gen) < 0.35) ++plan.n_ant;
  }
  return plan;
}

// Surface form of a planned word, occasionally inflected so that morphy
// has work to do. Only regular suffixes that resolve back to the lemma.
inline std::string surface_form(std::mt19937_64& gen, const std::string& lemma,
                                Pos pos, int group_index) {
  double r = rng::unit(gen);
  if (pos == Pos::Noun && r < 0.25) return lemma + "s";
  if (pos == Pos::Verb && r < 0.25) return lemma + "ed";
  if (group_index == 0 && r >= 0.25 && r < 0.35) return "irr" + lemma;
  return lemma;
}

}  // namespace detail

// Deterministic synthetic corpus plus a consistent mini database in the
// WordNet on-disk layout. Returns the generated records.
inline std::vector<RelationRecord> generate_fixture(
    const FixtureSpec& spec, const std::filesystem::path& corpus_path,
    const std::filesystem::path& wndb_dir) {
  std::mt19937_64 gen(spec.seed);
  std::vector<detail::ConceptGroup> groups = detail::fixture_groups();
  detail::write_fixture_wndb(wndb_dir, groups);

  static const std::vector<std::string> contrast_conns = {
      "but", "however", "yet", "while", "in contrast"};
  static const std::vector<std::string> concession_conns = {
      "although", "even though", "nevertheless", "still", "even so"};

  const int contrast_total = spec.relations / 2;
  const int concession_total = spec.relations - contrast_total;
  auto explicit_share = [](int total) { return (total * 7) / 10; };

  struct Slot {
    Sense sense;
    Explicitness expl;
  };
  std::vector<Slot> slots;
  for (int i = 0; i < contrast_total; ++i) {
    slots.push_back({Sense::Contrast, i < explicit_share(contrast_total)
                                          ? Explicitness::Explicit
                                          : Explicitness::Implicit});
  }
  for (int i = 0; i < concession_total; ++i) {
    slots.push_back({Sense::Concession, i < explicit_share(concession_total)
                                            ? Explicitness::Explicit
                                            : Explicitness::Implicit});
  }

  auto connective_plan = [&](const std::vector<std::string>& conns,
                             int total) {
    std::vector<std::string> plan;
    int first = std::min(spec.a_count, total);
    for (int i = 0; i < first; ++i) plan.push_back(conns[0]);
    size_t next = 1;
    for (int i = first; i < total; ++i) {
      plan.push_back(conns[next]);
      next = next + 1 >= conns.size() ? 1 : next + 1;
    }
    return plan;
  };
  std::vector<std::string> contrast_plan =
      connective_plan(contrast_conns, contrast_total);
  std::vector<std::string> concession_plan =
      connective_plan(concession_conns, concession_total);
  size_t contrast_next = 0, concession_next = 0;

  std::vector<RelationRecord> records;
  int filler_id = 0;
  for (size_t i = 0; i < slots.size(); ++i) {
    const Slot& slot = slots[i];
    RelationRecord r;
    char idbuf[32];
    std::snprintf(idbuf, sizeof(idbuf), "fx%04zu", i + 1);
    r.id = idbuf;
    r.sense = slot.sense;
    r.explicitness = slot.expl;
    r.connective = slot.sense == Sense::Contrast
                       ? contrast_plan[contrast_next++]
                       : concession_plan[concession_next++];

    bool shifted = spec.shift && slot.sense == Sense::Concession &&
                   slot.expl == Explicitness::Explicit;
    detail::MatchPlan plan = detail::draw_match_plan(gen, shifted);

    std::vector<std::string> words1, words2;
    if (!plan.discard) {
      std::vector<size_t> pool(groups.size());
      for (size_t k = 0; k < pool.size(); ++k) pool[k] = k;
      rng::shuffle(gen, pool);
      size_t next_group = 0;
      for (int s = 0; s < plan.n_syn; ++s) {
        const auto& cg = groups[pool[next_group++]];
        int a = rng::bounded(gen, 0, 2);
        int b = (a + rng::bounded(gen, 1, 2)) % 3;
        words1.push_back(detail::surface_form(gen, cg.left[static_cast<size_t>(a)],
                                              cg.pos, cg.group));
        words2.push_back(detail::surface_form(gen, cg.left[static_cast<size_t>(b)],
                                              cg.pos, cg.group));
      }
      for (int a = 0; a < plan.n_ant; ++a) {
        const auto& cg = groups[pool[next_group++]];
        std::string lw = cg.left[static_cast<size_t>(rng::bounded(gen, 0, 2))];
        std::string rw = cg.right[static_cast<size_t>(rng::bounded(gen, 0, 1))];
        bool swap_sides = rng::unit(gen) < 0.5;
        words1.push_back(detail::surface_form(gen, swap_sides ? rw : lw, cg.pos,
                                              cg.group));
        words2.push_back(detail::surface_form(gen, swap_sides ? lw : rw, cg.pos,
                                              cg.group));
      }
      // one unmatched word per argument from fresh groups: the planned
      // (n_syn, n_ant) is preserved and neither vector is all-zero, so the
      // relation survives the discard rule
      for (auto* words : {&words1, &words2}) {
        const auto& cg = groups[pool[next_group++]];
        const auto& side = rng::unit(gen) < 0.5 ? cg.left : cg.right;
        words->push_back(detail::surface_form(
            gen, side[static_cast<size_t>(rng::bounded(
                     gen, 0, static_cast<int>(side.size()) - 1))],
            cg.pos, cg.group));
      }
    }
    for (auto* words : {&words1, &words2}) {
      int fillers = rng::bounded(gen, 1, 3);
      for (int f = 0; f < fillers; ++f) {
        words->push_back("qq" + std::to_string(filler_id++));
      }
      rng::shuffle(gen, *words);
    }
    for (size_t k = 0; k < words1.size(); ++k) {
      if (k) r.arg1_text += " ";
      r.arg1_text += words1[k];
    }
    for (size_t k = 0; k < words2.size(); ++k) {
      if (k) r.arg2_text += " ";
      r.arg2_text += words2[k];
    }
    records.push_back(std::move(r));
  }

  if (!corpus_path.parent_path().empty()) {
    std::filesystem::create_directories(corpus_path.parent_path());
  }
  std::ofstream out(corpus_path);
  if (!out) throw DataError("cannot write corpus: " + corpus_path.string());
  out << "# synthetic fixture corpus (seed " << spec.seed << ", "
      << spec.relations << " relations)\n";
  serialize_corpus(out, records);
  return records;
}

}  // namespace synant

#endif  // SYNANT_FIXTURE_HPP
