#ifndef ANAFORO_RESOLVER_HPP_
#define ANAFORO_RESOLVER_HPP_

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anaforo/chunker.hpp"
#include "anaforo/corpus.hpp"
#include "anaforo/pleonastic.hpp"
#include "anaforo/zero_pronoun.hpp"

namespace anaforo {

enum class AnaphorKind { Personal, Reflexive, Demonstrative, Zero };
std::string_view to_string(AnaphorKind k);
AnaphorKind anaphor_kind_from_string(std::string_view s);

struct Anaphor {
  AnaphorKind kind = AnaphorKind::Personal;
  GramFunction function = GramFunction::Subject;
  Person person = kUnknownPerson;
  Gender gender = Gender::Unknown;
  Number number = Number::Unknown;
  int sentence = 0;
  int token = 0;     // pronoun token, or finite verb for zero pronouns
  int position = 0;  // candidates must end at or before this token index
  int clause = 0;
  int discourse_marker = kNoMarker;  // mention id in the chains
  std::string surface;  // "∅" for zero pronouns
  std::string lemma;

  bool zero() const { return kind == AnaphorKind::Zero; }
  Locator locator() const { return {sentence, zero(), token, token + 1}; }
  std::string id() const { return locator().str(); }
  friend bool operator==(const Anaphor&, const Anaphor&) = default;
};

struct Candidate {
  int marker = kNoMarker;
  int sentence = 0;
  int head = 0;
  Span span;
  Person person = kUnknownPerson;
  Gender gender = Gender::Unknown;
  Number number = Number::Unknown;
  SemCategory sem_category = SemCategory::Unknown;
  GramFunction function = GramFunction::Other;
  int clause = 0;
  int distance = 0;  // in sentences
  int repetition = 1;
  bool proper = false;
  bool indefinite = false;
  bool precedes_verb = false;
  bool solved_zero = false;
  bool same_function = false;
  bool in_pp = false;       // inside a prepositional phrase
  bool top_level = false;   // a direct child of the sentence
  bool coordinated = false;
  // Same entity as something in the anaphor's own clause: chained to an
  // anaphor there, or sharing the head lemma of a full NP there.
  bool clause_mate = false;
  std::string head_lemma;

  Locator locator() const { return {sentence, false, span.begin, span.end}; }
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Preference ids: a same sentence, b repeated entity, c precedes its verb,
// d proper noun, e not indefinite, f same function, z1 solved a zero in the
// sentence, z2 gender matches a zero pronoun's known gender.
bool is_known_preference(std::string_view id);
bool satisfies(const std::string& pref, const Anaphor& a, const Candidate& c);

class PreferenceOrders {
 public:
  static PreferenceOrders defaults();
  // Lines: `<ES|EN> <personal|reflexive|demonstrative|zero> = id id ...`.
  static PreferenceOrders parse(std::istream& in,
                                const std::string& source = "<prefs>");
  static PreferenceOrders load(const std::string& path);
  // Same order for every language and kind.
  static PreferenceOrders uniform(std::vector<std::string> order);

  void set(Lang lang, AnaphorKind kind, std::vector<std::string> order);
  // Reflexive and demonstrative anaphors fall back to the personal order.
  const std::vector<std::string>& get(Lang lang, AnaphorKind kind) const;

 private:
  std::map<std::pair<Lang, AnaphorKind>, std::vector<std::string>> orders_;
};

void validate_order(const std::vector<std::string>& order);

struct ResolverConfig {
  bool semantics = true;
  int window = 4;
  PreferenceOrders orders = PreferenceOrders::defaults();
};

// Chains over discourse markers. The canonical id of a chain is its
// smallest marker.
class Chains {
 public:
  int find(int marker) const;
  void unite(int a, int b);
  bool same(int a, int b) const { return find(a) == find(b); }
  // Members of each chain with more than one mention, keyed by canonical id.
  std::map<int, std::vector<int>> groups() const;

 private:
  mutable std::map<int, int> parent_;
};

struct Resolution {
  int anaphor = 0;  // index into the anaphor list
  std::optional<int> chosen;  // marker of the chosen NP
  std::vector<int> ranked;
  std::vector<std::string> fired;
  std::string reason;  // why unresolved: "no-candidates" or "cataphoric"
  int chain = kNoMarker;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

// Everything the resolver and the baselines read.
struct Analysis {
  Document doc;
  std::vector<ChunkedSentence> chunked;
  ZeroDetection zero;
  std::vector<std::vector<int>> pleonastic;  // per sentence
  std::vector<Anaphor> anaphors;
  std::vector<Resolution> resolutions;

  const Sentence& sentence(int s) const { return doc.sentences[s]; }
  const SlotStructure& tree(int s) const { return chunked[s].tree; }
  const Clause& clause(int s, int c) const { return chunked[s].clauses[c]; }
  // Finds an NP node by marker (nullptr when absent).
  const SlotStructure* find_np(int marker, int* sentence = nullptr) const;
};

// Subject NP of a clause: the nearest pre-verbal non-PP NP agreeing with the
// verb. Returns the SENT child index or -1.
int clause_subject(const Sentence& sentence, const SlotStructure& tree,
                   const Clause& clause);

// Function of the node covering `token` at the top level of its sentence.
GramFunction function_at(const Sentence& sentence, const SlotStructure& tree,
                         const std::vector<Clause>& clauses, int token);

std::vector<Anaphor> detect_anaphors(const Analysis& a);

// State that grows as anaphors are resolved in textual order.
class ResolutionState {
 public:
  explicit ResolutionState(const Analysis& a);

  void record(const Anaphor& anaphor, const Resolution& r);
  const Chains& chains() const { return chains_; }
  // Resolved anaphors so far.
  const std::vector<std::pair<const Anaphor*, int>>& resolved() const {
    return resolved_;
  }

 private:
  Chains chains_;
  std::vector<std::pair<const Anaphor*, int>> resolved_;  // (anaphor, marker)
};

std::vector<Candidate> collect_candidates(const Analysis& a,
                                          const Anaphor& anaphor,
                                          const ResolutionState& state,
                                          int window);

// Individual constraint predicates.
bool morph_compatible(const Analysis& a, const Anaphor& anaphor,
                      const Candidate& c);
bool semantic_compatible(const Analysis& a, const Anaphor& anaphor,
                         const Candidate& c);
// Candidates excluded by clause-level syntax (the reflexive rule is a
// filter over the whole list and lives in apply_constraints).
bool syntax_excludes(const Analysis& a, const Anaphor& anaphor,
                     const Candidate& c);

// Shared constraint filter: agreement, then syntax, then semantics. Appends
// "morph:N>M", "syntax:N>M" and (when enabled) "sem:N>M" to `audit`.
std::vector<Candidate> apply_constraints(const Analysis& a,
                                         const Anaphor& anaphor,
                                         const std::vector<Candidate>& cands,
                                         const ResolverConfig& config,
                                         std::vector<std::string>* audit);

using ConstraintFilter = std::function<std::vector<Candidate>(
    const Analysis&, const Anaphor&, const std::vector<Candidate>&,
    const ResolverConfig&, std::vector<std::string>*)>;

// True when `a` is closer to the anaphor than `b`.
bool closer(const Candidate& a, const Candidate& b);

// Sequential filter over the preference order. Appends "<id>:skip",
// "<id>:all" or "<id>:filter-<n>" per preference. Throws ConfigError on an
// unknown id.
std::vector<Candidate> rank_preferences(const Anaphor& anaphor,
                                        const std::vector<Candidate>& cands,
                                        const std::vector<std::string>& order,
                                        std::vector<std::string>* audit);

// Orders the constraint survivors; the first element is chosen.
using CandidateSelector = std::function<std::vector<Candidate>(
    const Analysis&, const Anaphor&, const std::vector<Candidate>&,
    std::vector<std::string>*)>;

// Shared resolution loop: candidate collection, constraint filter, the
// cataphoric-zero check, then `select` over the survivors.
std::vector<Resolution> resolve_with(const Analysis& a,
                                     const ResolverConfig& config,
                                     const ConstraintFilter& filter,
                                     const CandidateSelector& select);

// Runs the whole resolver over `a.anaphors` in textual order.
std::vector<Resolution> resolve_document(const Analysis& a,
                                         const ResolverConfig& config,
                                         const ConstraintFilter& filter = {});

// Chains built from a resolution list.
Chains build_chains(const Analysis& a, const std::vector<Resolution>& rs);

}  // namespace anaforo

#endif  // ANAFORO_RESOLVER_HPP_
