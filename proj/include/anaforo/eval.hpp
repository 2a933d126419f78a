#ifndef ANAFORO_EVAL_HPP_
#define ANAFORO_EVAL_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anaforo/corpus.hpp"
#include "anaforo/resolver.hpp"
#include "anaforo/zero_pronoun.hpp"

namespace anaforo {

struct Metric {
  long correct = 0;
  long attempted = 0;
  long total_real = 0;

  std::optional<double> precision() const;
  std::optional<double> recall() const;
  // One decimal, or "NONE".
  std::string precision_pct() const;
  std::string recall_pct() const;

  Metric& operator+=(const Metric& o);
  friend bool operator==(const Metric&, const Metric&) = default;
};

// Resolver output reduced to what scoring needs.
struct ResolvedItem {
  Locator anaphor;
  AnaphorKind kind = AnaphorKind::Personal;
  GramFunction function = GramFunction::Subject;
  std::optional<Locator> antecedent;  // chosen NP span
  int head = -1;                      // chosen NP head token
  std::string reason;

  friend bool operator==(const ResolvedItem&, const ResolvedItem&) = default;
};

std::vector<ResolvedItem> resolved_items(const Analysis& a,
                                         const std::vector<Resolution>& rs);

struct Outcome {
  Locator anaphor;
  bool attempted = false;
  bool correct = false;
};

struct ResolutionScore {
  Metric overall;
  std::map<std::string, Metric> by_kind;      // personal, zero, ...
  std::map<std::string, Metric> by_function;  // subject, complement, ...
  std::vector<Outcome> outcomes;  // one per system anaphor, textual order

  ResolutionScore& operator+=(const ResolutionScore& o);
};

// A resolution is correct when the chosen head lies inside a span of the
// gold chain of the anaphor. Gold cataphoric and exophoric anaphors are not
// counted as attempted. Throws DataError when a gold record has no system
// anaphor and the locator is not a pronoun token in `doc`.
ResolutionScore score_resolutions(const std::vector<ResolvedItem>& items,
                                  const GoldAnnotations& gold,
                                  const Document& doc);

struct DetectionScore {
  Metric overall;
  // Keyed "<person> omitted" or "<person> present" by the gold status.
  std::map<std::string, Metric> cells;

  DetectionScore& operator+=(const DetectionScore& o);
};

// Every finite verb with a gold status counts as attempted.
DetectionScore score_detection(const std::vector<VerbReport>& statuses,
                               const GoldAnnotations& gold);

struct TranslationItem {
  Locator anaphor;
  std::string target;
};

// Case-folded exact match against gold targets.
Metric score_translations(const std::vector<TranslationItem>& translations,
                          const GoldAnnotations& gold);

struct KappaInput {
  std::vector<std::string> a;
  std::vector<std::string> b;
};

// Throws Error on empty or unequal inputs.
double kappa(const KappaInput& in);

// Paired labels over the pronouns both annotators annotated: the antecedent
// locator or "exophoric".
KappaInput kappa_items(const GoldAnnotations& a, const GoldAnnotations& b);

struct AlgorithmRow {
  std::string algorithm;
  ResolutionScore score;
  long wins = 0;    // anaphors this one got right and another got wrong
  long losses = 0;
};

struct ComparisonInput {
  std::string algorithm;
  std::vector<ResolutionScore> documents;  // same document order per algorithm
};

// Rows follow the input order; the counts do not depend on it.
std::vector<AlgorithmRow> compare(const std::vector<ComparisonInput>& runs);

}  // namespace anaforo

#endif  // ANAFORO_EVAL_HPP_
