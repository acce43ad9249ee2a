#ifndef SYNANT_POS_HPP
#define SYNANT_POS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace synant {

// Enumerator order matches the lexicon's block order: adjectives first,
// then nouns, verbs, adverbs.
enum class Pos { Adjective = 0, Noun = 1, Verb = 2, Adverb = 3 };

inline constexpr std::array<Pos, 4> kAllPos = {Pos::Adjective, Pos::Noun,
                                               Pos::Verb, Pos::Adverb};

inline std::string_view pos_name(Pos p) {
  switch (p) {
    case Pos::Adjective: return "adjective";
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adverb: return "adverb";
  }
  return "?";
}

// File suffix used by the database on disk (index.noun, data.adj, verb.exc).
inline std::string_view pos_file_suffix(Pos p) {
  switch (p) {
    case Pos::Adjective: return "adj";
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adverb: return "adv";
  }
  return "?";
}

// Single-letter tag used inside database files. 's' (adjective satellite)
// folds into the adjective class.
inline std::optional<Pos> pos_from_char(char c) {
  switch (c) {
    case 'n': return Pos::Noun;
    case 'v': return Pos::Verb;
    case 'a':
    case 's': return Pos::Adjective;
    case 'r': return Pos::Adverb;
    default: return std::nullopt;
  }
}

inline std::optional<Pos> pos_from_name(std::string_view s) {
  if (s == "adjective") return Pos::Adjective;
  if (s == "noun") return Pos::Noun;
  if (s == "verb") return Pos::Verb;
  if (s == "adverb") return Pos::Adverb;
  return std::nullopt;
}

}  // namespace synant

#endif  // SYNANT_POS_HPP
