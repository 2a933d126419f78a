#ifndef ANAFORO_CHUNKER_HPP_
#define ANAFORO_CHUNKER_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "anaforo/corpus.hpp"
#include "anaforo/types.hpp"

namespace anaforo {

enum class NodeKind { NP, PP, VG, CLAUSE, SENT, TOKEN_LEAF };
std::string_view to_string(NodeKind k);
NodeKind node_kind_from_string(std::string_view s);

constexpr int kNoMarker = -1;

struct SlotStructure {
  NodeKind kind = NodeKind::TOKEN_LEAF;
  Person person = kUnknownPerson;
  Gender gender = Gender::Unknown;
  Number number = Number::Unknown;
  SemCategory sem_category = SemCategory::Unknown;
  Definiteness definiteness = Definiteness::Unknown;
  int discourse_marker = kNoMarker;
  int head = -1;  // token index within the sentence
  Span span;
  std::vector<SlotStructure> children;
  // Set on NPs built from "X conj Y"; the conjuncts are the NP children.
  bool coordinated = false;

  friend bool operator==(const SlotStructure&, const SlotStructure&) = default;
};

// One element of a token class: a category with required/forbidden
// features and optional lemma inclusion/exclusion lists.
struct TokenTest {
  std::optional<Pos> pos;  // empty matches any category
  std::vector<std::string> required;
  std::vector<std::string> forbidden;
  std::vector<std::string> lemmas;
  std::vector<std::string> excluded_lemmas;

  bool matches(const Token& t) const;
};

struct TokenClass {
  std::string name;
  std::vector<TokenTest> alternatives;

  bool matches(const Token& t) const;
};

struct PatternElement {
  std::string ref;  // class name or constituent name
  char quantifier = 0;  // 0, '?', '*', '+'
  bool head = false;
};

struct ChunkRule {
  NodeKind kind = NodeKind::NP;
  std::vector<PatternElement> elements;
  int line = 0;
};

// Chunk grammar. Line format:
//   class NAME = ALT | ALT ...        ALT: CAT[.feat][!feat][[lemmas]][~[lemmas]]
//   NP: ELEM ELEM ...                 ELEM: NAME[?*+][@]
//   set lookahead = N
// The classes BOUNDARY and COORDINATOR drive clause splitting and NP
// coordination; INFINITIVE_OPENER marks prepositions that head a
// non-finite clause (`al pasar ...`).
class Grammar {
 public:
  static Grammar parse(std::istream& in, const std::string& source = "<grammar>");
  static Grammar load(const std::string& path);

  const std::vector<ChunkRule>& rules() const { return rules_; }
  const TokenClass* find_class(std::string_view name) const;
  bool is_boundary(const Token& t) const;
  bool is_coordinator(const Token& t) const;
  bool opens_infinitive(const Token& t) const;
  int lookahead() const { return lookahead_; }

 private:
  friend class GrammarParser;
  std::vector<TokenClass> classes_;
  std::vector<ChunkRule> rules_;
  int lookahead_ = 6;
};

// Allocates discourse markers; one per document.
class MarkerCounter {
 public:
  int next() { return next_++; }
  int peek() const { return next_; }

 private:
  int next_ = 0;
};

inline bool is_clause_verb(const Token& t) {
  return t.pos == Pos::Verb &&
         (t.verb_flags.finite() || t.verb_flags.imperative());
}

// Returns a SENT node. Never fails; tokens not covered by a rule become
// TOKEN_LEAF children. Markers come from `markers`, or from a fresh counter.
SlotStructure chunk_sentence(const Sentence& sentence, const Grammar& grammar,
                             MarkerCounter* markers = nullptr);

struct Clause {
  int sentence = 0;
  int index = 0;  // position within the sentence
  Span span;
  std::optional<int> verb;  // finite verb token
  int vg = -1;              // index of the VG among the SENT children; may be
                            // a non-finite VG, then `verb` is empty
  std::vector<int> pre;     // SENT child indices before the VG (all when verbless)
  std::vector<int> post;    // after the VG

  friend bool operator==(const Clause&, const Clause&) = default;
};

std::vector<Clause> split_clauses(const SlotStructure& sent_ss,
                                  const Sentence& sentence,
                                  const Grammar& grammar);

struct ChunkedSentence {
  SlotStructure tree;
  std::vector<Clause> clauses;
};

std::vector<ChunkedSentence> chunk_document(const Document& doc,
                                            const Grammar& grammar);

// Finds the innermost clause containing token `t`.
const Clause* clause_of(const std::vector<Clause>& clauses, int token);

// Depth-first visit over all nodes in pre-order.
template <typename Fn>
void visit_nodes(const SlotStructure& n, Fn&& fn) {
  fn(n);
  for (const auto& c : n.children) visit_nodes(c, fn);
}

}  // namespace anaforo

#endif  // ANAFORO_CHUNKER_HPP_
