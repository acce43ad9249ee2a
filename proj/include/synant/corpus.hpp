#ifndef SYNANT_CORPUS_HPP
#define SYNANT_CORPUS_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "synant/error.hpp"
#include "synant/strutil.hpp"

namespace synant {

enum class Sense { Contrast, Concession };
enum class Explicitness { Explicit, Implicit };

inline std::string_view sense_name(Sense s) {
  return s == Sense::Contrast ? "Contrast" : "Concession";
}

inline std::string_view sense_label(Sense s) {
  return s == Sense::Contrast ? "Comparison.Contrast" : "Comparison.Concession";
}

inline std::string_view explicitness_name(Explicitness e) {
  return e == Explicitness::Explicit ? "Explicit" : "Implicit";
}

// One discourse relation: two argument texts joined by a connective.
// For implicit relations the connective is the annotator-inferred one.
struct RelationRecord {
  std::string id;
  Sense sense = Sense::Contrast;
  Explicitness explicitness = Explicitness::Explicit;
  std::string connective;  // non-empty, lowercase
  std::string arg1_text;
  std::string arg2_text;

  bool operator==(const RelationRecord&) const = default;
};

struct Token {
  std::string surface;  // lowercase, no edge punctuation
  int position = 0;     // index within the argument's token list
};

struct ParseError {
  int line = 0;
  std::string message;
};

// Lowercase, split on whitespace, strip leading/trailing non-alphanumeric
// characters. Internal punctuation (hyphens, apostrophes, dots) survives:
// "U.S." -> "u.s". Tokens that strip to nothing are dropped.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  for (const std::string& raw : split_ws(text)) {
    std::string w = to_lower(raw);
    size_t b = 0, e = w.size();
    while (b < e && !is_ascii_alnum(w[b])) ++b;
    while (e > b && !is_ascii_alnum(w[e - 1])) --e;
    if (e > b) {
      out.push_back(Token{w.substr(b, e - b), static_cast<int>(out.size())});
    }
  }
  return out;
}

namespace detail {

inline RelationRecord parse_relation_line(const std::string& line, int lineno) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("line " + std::to_string(lineno) +
                    ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) {
    throw DataError("line " + std::to_string(lineno) + ": expected an object");
  }
  auto str_field = [&](const char* key) -> std::string {
    if (!j.contains(key) || !j[key].is_string()) {
      throw DataError("line " + std::to_string(lineno) +
                      ": missing string field '" + key + "'");
    }
    return j[key].get<std::string>();
  };

  RelationRecord r;
  r.id = str_field("id");

  std::string sense = str_field("sense");
  if (sense == "Comparison.Contrast") {
    r.sense = Sense::Contrast;
  } else if (sense == "Comparison.Concession") {
    r.sense = Sense::Concession;
  } else {
    throw DataError("line " + std::to_string(lineno) + ": unknown sense \"" +
                    sense + "\"");
  }

  std::string type = str_field("type");
  if (type == "Explicit") {
    r.explicitness = Explicitness::Explicit;
  } else if (type == "Implicit") {
    r.explicitness = Explicitness::Implicit;
  } else {
    throw DataError("line " + std::to_string(lineno) + ": unknown type \"" +
                    type + "\"");
  }

  r.connective = to_lower(str_field("connective"));
  if (trim(r.connective).empty()) {
    throw DataError("line " + std::to_string(lineno) + ": empty connective");
  }
  r.arg1_text = str_field("arg1");
  r.arg2_text = str_field("arg2");
  if (trim(r.arg1_text).empty() || trim(r.arg2_text).empty()) {
    throw DataError("line " + std::to_string(lineno) + ": empty argument");
  }
  return r;
}

}  // namespace detail

// Parse the JSON-Lines relation format. One object per line with keys
// id, sense, type, connective, arg1, arg2; '#' lines and blank lines are
// skipped. With errors == nullptr the first malformed line throws
// DataError; otherwise bad lines are collected and parsing continues.
inline std::vector<RelationRecord> parse_corpus(
    std::istream& in, std::vector<ParseError>* errors = nullptr) {
  std::vector<RelationRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      records.push_back(detail::parse_relation_line(line, lineno));
    } catch (const DataError& e) {
      if (!errors) throw;
      errors->push_back(ParseError{lineno, e.what()});
    }
  }
  return records;
}

inline void serialize_corpus(std::ostream& out,
                             const std::vector<RelationRecord>& records) {
  for (const RelationRecord& r : records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["sense"] = std::string(sense_label(r.sense));
    j["type"] = std::string(explicitness_name(r.explicitness));
    j["connective"] = r.connective;
    j["arg1"] = r.arg1_text;
    j["arg2"] = r.arg2_text;
    out << j.dump() << "\n";
  }
}

}  // namespace synant

#endif  // SYNANT_CORPUS_HPP
