#ifndef ANAFORO_INTERLINGUA_HPP_
#define ANAFORO_INTERLINGUA_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anaforo/error.hpp"
#include "anaforo/resolver.hpp"

namespace anaforo {

inline constexpr int kInterlinguaVersion = 1;

// A role filler: an entity id, or a literal source span when the NP has no
// registered entity.
struct RoleValue {
  std::optional<int> entity;
  std::string span;  // locator of the filler
  std::string text;  // surface of the literal (empty for entities)

  friend bool operator==(const RoleValue&, const RoleValue&) = default;
};

struct IrClause {
  std::string id;  // "s<i>.c<k>"
  std::optional<std::string> verb;
  std::string sense;
  std::vector<std::string> flags;  // sorted verb flag names
  std::string polarity = "unknown";
  // agent, theme, other(<prep>), other(np); repeats get "#2", "#3", ...
  std::map<std::string, RoleValue> roles;
  std::string span;

  friend bool operator==(const IrClause&, const IrClause&) = default;
};

struct IrEntity {
  int id = 0;
  std::string head;     // lemma
  std::string surface;  // source-language head surface
  Gender gender = Gender::Unknown;
  Number number = Number::Unknown;
  SemCategory sem = SemCategory::Unknown;
  bool proper = false;
  std::vector<int> conjuncts;  // entities of a coordinated NP
  std::vector<std::string> mentions;

  friend bool operator==(const IrEntity&, const IrEntity&) = default;
};

struct IrPronoun {
  std::string anaphor;
  std::optional<int> entity;
  std::optional<std::string> antecedent;
  GramFunction function = GramFunction::Subject;
  AnaphorKind kind = AnaphorKind::Personal;
  std::string surface;
  std::string lemma;
  Person person = kUnknownPerson;
  Gender gender = Gender::Unknown;
  Number number = Number::Unknown;
  bool initial = false;  // first word of its sentence
  std::string reason;

  friend bool operator==(const IrPronoun&, const IrPronoun&) = default;
};

struct InterlinguaText {
  Lang lang = Lang::ES;
  std::string id;
  std::vector<IrClause> clauses;
  std::vector<IrEntity> entities;  // ascending id
  std::vector<IrPronoun> pronouns;

  const IrEntity* entity(int id) const;
  friend bool operator==(const InterlinguaText&, const InterlinguaText&) = default;
};

// Malformed interlingua input; `path` is a JSON pointer to the bad value.
class IrError : public DataError {
 public:
  IrError(const std::string& path, const std::string& msg)
      : DataError("interlingua " + (path.empty() ? std::string("/") : path) +
                  ": " + msg),
        path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

InterlinguaText build_interlingua(const Analysis& a,
                                  const std::vector<Resolution>& rs);

// Canonical compact JSON, sorted keys, with "irv".
std::string serialize(const InterlinguaText& ir);
InterlinguaText deserialize(std::string_view bytes);

}  // namespace anaforo

#endif  // ANAFORO_INTERLINGUA_HPP_
