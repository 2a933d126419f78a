#ifndef ANAFORO_ZERO_PRONOUN_HPP_
#define ANAFORO_ZERO_PRONOUN_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "anaforo/chunker.hpp"
#include "anaforo/corpus.hpp"

namespace anaforo {

// Verbs whose subject slot is empty by construction. A bare lemma matches
// any use (`llover`); `ser + hora|tarde` requires one of the listed lemmas as
// the head of a post-verbal NP.
class ImpersonalList {
 public:
  struct Entry {
    std::string lemma;
    std::vector<std::string> heads;
  };

  static ImpersonalList parse(std::istream& in,
                              const std::string& source = "<impersonal>");
  static ImpersonalList load(const std::string& path);

  void add(Entry e) { entries_.push_back(std::move(e)); }
  bool matches(const Sentence& sentence, const SlotStructure& tree,
               const Clause& clause) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct SubjectStatus {
  SubjectKind kind = SubjectKind::Omitted;
  // For Present: SENT child index and token span of the subject.
  int child = -1;
  Span subject;
};

// Main verb of a clause's VG (the lemma used for impersonal lookup).
int main_verb(const SlotStructure& tree, const Clause& clause);

SubjectStatus classify_verb(const Sentence& sentence, const SlotStructure& tree,
                            const Clause& clause,
                            const ImpersonalList& impersonal);

// Gender of the post-verbal attribute of a copulative verb, or Unknown.
Gender infer_copulative_gender(const Sentence& sentence,
                               const SlotStructure& tree, const Clause& clause);

struct ZeroPronoun {
  int sentence = 0;
  int verb = 0;    // finite verb token
  int clause = 0;  // clause index within the sentence
  int position = 0;  // token index the omitted subject precedes (VG start)
  Person person = kUnknownPerson;
  Number number = Number::Unknown;
  Gender gender = Gender::Unknown;
  int discourse_marker = kNoMarker;

  Locator locator() const { return {sentence, true, verb, verb + 1}; }
  std::string id() const { return locator().str(); }
  friend bool operator==(const ZeroPronoun&, const ZeroPronoun&) = default;
};

struct VerbReport {
  int sentence = 0;
  int verb = 0;
  std::string lemma;
  Person person = kUnknownPerson;
  Number number = Number::Unknown;
  SubjectKind status = SubjectKind::Present;

  friend bool operator==(const VerbReport&, const VerbReport&) = default;
};

struct ZeroDetection {
  std::vector<ZeroPronoun> zeros;
  std::vector<VerbReport> verbs;  // one per clause with a finite verb
};

// Classifies every clause verb and creates one zero pronoun per omitted
// subject. Zero pronouns are virtual: tokens are not renumbered, and each
// takes the next discourse marker after those already in `chunked`.
ZeroDetection insert_zero_pronouns(const Document& doc,
                                   const std::vector<ChunkedSentence>& chunked,
                                   const ImpersonalList& impersonal);

// First marker not used by any NP in the chunked document.
int next_free_marker(const std::vector<ChunkedSentence>& chunked);

// Heuristic taxonomy. `antecedent_before` says whether an agreeing
// candidate precedes the zero pronoun.
Taxonomy label_zero_taxonomy(const ZeroPronoun& zp, const SlotStructure& tree,
                             const Clause& clause, bool antecedent_before);

// Gold label when the gold file annotates this zero pronoun.
std::optional<Taxonomy> label_zero_taxonomy(const ZeroPronoun& zp,
                                            const GoldAnnotations& gold);

}  // namespace anaforo

#endif  // ANAFORO_ZERO_PRONOUN_HPP_
