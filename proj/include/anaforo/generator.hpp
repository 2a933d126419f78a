#ifndef ANAFORO_GENERATOR_HPP_
#define ANAFORO_GENERATOR_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "anaforo/corpus.hpp"
#include "anaforo/interlingua.hpp"

namespace anaforo {

enum class Direction { ES2EN, EN2ES };
std::string_view to_string(Direction d);
Direction direction_from_string(std::string_view s);  // ES2EN, ES-EN, ...
inline Direction direction_for(Lang source) {
  return source == Lang::ES ? Direction::ES2EN : Direction::EN2ES;
}

// Left-hand side of a rule. Gender is m or f and number sg or pl, both
// for the antecedent in the target language.
struct RuleKey {
  Direction direction = Direction::EN2ES;
  std::string pron_class;  // he, it, él, lo, ∅, ...
  std::string function;    // SUBJ, COMPL or PREP
  SemCategory sem = SemCategory::Unknown;
  Gender gender = Gender::Masc;
  Number number = Number::Sg;

  std::string str() const;  // "EN2ES it SUBJ object m sg"
  friend bool operator==(const RuleKey&, const RuleKey&) = default;
  friend auto operator<=>(const RuleKey&, const RuleKey&) = default;
};

inline constexpr const char* kUntranslatable = "UNTRANSLATABLE";

struct MorphRule {
  RuleKey lhs;
  std::string rhs;  // pronoun, "∅" or UNTRANSLATABLE
  int line = 0;
};

// One rule per line: `EN2ES it SUBJ object m sg -> éste`. A
// `# version: X` comment names the table version.
class RuleTable {
 public:
  static RuleTable parse(std::istream& in, const std::string& source = "<rules>");
  static RuleTable load(const std::string& path);

  void add(MorphRule r) { rules_.push_back(std::move(r)); }
  // First rule with this lhs, or nullptr.
  const MorphRule* find(const RuleKey& key) const;
  const std::vector<MorphRule>& rules() const { return rules_; }
  std::vector<MorphRule>& rules() { return rules_; }
  const std::string& version() const { return version_; }

 private:
  std::vector<MorphRule> rules_;
  std::string version_ = "unversioned";
};

// Every lhs the generator can ask for.
std::vector<RuleKey> lhs_domain();

struct ValidationReport {
  std::vector<RuleKey> gaps;
  std::vector<RuleKey> overlaps;  // each lhs with more than one rule, once
  std::vector<RuleKey> outside;   // rules whose lhs is not in the domain
  bool ok() const { return gaps.empty() && overlaps.empty() && outside.empty(); }
};

ValidationReport validate_rule_table(const RuleTable& table);

struct TargetFeatures {
  Gender gender = Gender::Masc;
  Number number = Number::Sg;
  SemCategory sem = SemCategory::Unknown;
  std::string how;  // dictionary, tag, default or pronoun
  bool dictionary_miss = false;

  friend bool operator==(const TargetFeatures&, const TargetFeatures&) = default;
};

// Antecedent features in the target language. `ir` resolves the conjuncts
// of a coordinated entity.
TargetFeatures target_features(const IrEntity& entity, Direction direction,
                               const BilingualDictionary& dict,
                               const InterlinguaText* ir = nullptr);

// Features of an unresolved pronoun, taken from the pronoun itself.
TargetFeatures pronoun_features(const IrPronoun& record);

// Class and function for the table, or nothing when the pronoun has no row
// (reflexives, for instance).
std::optional<std::pair<std::string, std::string>> pronoun_class(
    const IrPronoun& record, Direction direction);

struct GeneratorConfig {
  // Emit ∅ instead of overt Spanish subject pronouns.
  bool drop_spanish_subjects = false;
};

struct PronounTranslation {
  std::string anaphor;
  std::string source;
  std::string target;
  std::string rule;  // lhs of the fired rule, empty when none fired
  TargetFeatures features;
  bool low_confidence = false;

  friend bool operator==(const PronounTranslation&, const PronounTranslation&) = default;
};

// Throws ConfigError when the table has no row for the pronoun's lhs.
PronounTranslation translate_pronoun(const IrPronoun& record,
                                     const TargetFeatures& features,
                                     Direction direction, const RuleTable& table,
                                     const GeneratorConfig& config = {});

std::vector<PronounTranslation> translate(const InterlinguaText& ir,
                                          const BilingualDictionary& dict,
                                          const RuleTable& table,
                                          const GeneratorConfig& config = {});

}  // namespace anaforo

#endif  // ANAFORO_GENERATOR_HPP_
