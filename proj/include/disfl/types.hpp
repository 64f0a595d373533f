#ifndef DISFL_TYPES_HPP
#define DISFL_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace disfl {

/// One whitespace-free token. Tokens are plain UTF-8 byte strings.
using Token = std::string;

/// A normalized sentence: non-empty tokens, none containing whitespace.
/// An empty `tokens` vector is the "normalized to nothing" marker; writers
/// and corpus builders drop such sentences and count them.
struct Sentence {
  std::vector<Token> tokens;
  std::string id;  // optional opaque id (e.g. source line), may be empty

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
  bool operator==(const Sentence& o) const { return tokens == o.tokens; }
};

/// Per-token disfluency label. D = disfluent (added/reparandum word),
/// O = fluent.
enum class Label : std::uint8_t { O = 0, D = 1 };

inline char label_char(Label l) { return l == Label::D ? 'D' : 'O'; }

inline Label label_from_char(char c) {
  if (c == 'D') return Label::D;
  if (c == 'O') return Label::O;
  throw std::runtime_error(std::string("invalid token label '") + c + "'");
}

/// Sentence plus aligned per-token labels.
struct TaggedSentence {
  Sentence sentence;
  std::vector<Label> labels;
  std::string provenance;  // optional: "pseudo", "pred:<backend>", ...

  bool aligned() const { return sentence.tokens.size() == labels.size(); }
};

/// Whole-sentence grammaticality judgment.
enum class Judgment : std::uint8_t { Right = 0, Error = 1 };

inline const char* judgment_name(Judgment j) {
  return j == Judgment::Right ? "right" : "error";
}

inline Judgment judgment_from_name(const std::string& s) {
  if (s == "right") return Judgment::Right;
  if (s == "error") return Judgment::Error;
  throw std::runtime_error("invalid judgment label '" + s + "'");
}

/// Sentence plus grammaticality label.
struct JudgedSentence {
  Sentence sentence;
  Judgment label = Judgment::Right;
};

}  // namespace disfl

#endif  // DISFL_TYPES_HPP
