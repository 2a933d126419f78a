#include "anaforo/types.hpp"

#include <array>
#include <utility>

#include "anaforo/error.hpp"

namespace anaforo {
namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<Lang, 2> kLangNames{{{Lang::ES, "ES"}, {Lang::EN, "EN"}}};

constexpr NameTable<Pos, 11> kPosNames{{
    {Pos::Noun, "NOUN"},
    {Pos::ProperNoun, "PROPER_NOUN"},
    {Pos::Verb, "VERB"},
    {Pos::Adj, "ADJ"},
    {Pos::Det, "DET"},
    {Pos::Pron, "PRON"},
    {Pos::Prep, "PREP"},
    {Pos::Conj, "CONJ"},
    {Pos::Adv, "ADV"},
    {Pos::Punct, "PUNCT"},
    {Pos::Other, "OTHER"},
}};

constexpr NameTable<Gender, 4> kGenderNames{{
    {Gender::Masc, "masc"},
    {Gender::Fem, "fem"},
    {Gender::Neut, "neut"},
    {Gender::Unknown, "unknown"},
}};

constexpr NameTable<Number, 3> kNumberNames{{
    {Number::Sg, "sg"},
    {Number::Pl, "pl"},
    {Number::Unknown, "unknown"},
}};

constexpr NameTable<PronSubtype, 6> kSubtypeNames{{
    {PronSubtype::None, "none"},
    {PronSubtype::Personal, "personal"},
    {PronSubtype::Reflexive, "reflexive"},
    {PronSubtype::Demonstrative, "demonstrative"},
    {PronSubtype::Relative, "relative"},
    {PronSubtype::Possessive, "possessive"},
}};

constexpr NameTable<SemCategory, 4> kSemNames{{
    {SemCategory::Person, "person"},
    {SemCategory::Animal, "animal"},
    {SemCategory::Object, "object"},
    {SemCategory::Unknown, "unknown"},
}};

constexpr NameTable<Definiteness, 3> kDefNames{{
    {Definiteness::Unknown, "unknown"},
    {Definiteness::Definite, "definite"},
    {Definiteness::Indefinite, "indefinite"},
}};

constexpr NameTable<GramFunction, 4> kFunctionNames{{
    {GramFunction::Subject, "subject"},
    {GramFunction::Complement, "complement"},
    {GramFunction::Prepositional, "prepositional"},
    {GramFunction::Other, "other"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E v) {
  for (const auto& [e, name] : table) {
    if (e == v) return name;
  }
  return "?";
}

template <typename E, std::size_t N>
E value_of(const NameTable<E, N>& table, std::string_view s,
           std::string_view what) {
  for (const auto& [e, name] : table) {
    if (name == s) return e;
  }
  throw Error("unknown " + std::string(what) + " '" + std::string(s) + "'");
}

}  // namespace

std::string_view to_string(Lang v) { return name_of(kLangNames, v); }
std::string_view to_string(Pos v) { return name_of(kPosNames, v); }
std::string_view to_string(Gender v) { return name_of(kGenderNames, v); }
std::string_view to_string(Number v) { return name_of(kNumberNames, v); }
std::string_view to_string(PronSubtype v) { return name_of(kSubtypeNames, v); }
std::string_view to_string(SemCategory v) { return name_of(kSemNames, v); }
std::string_view to_string(Definiteness v) { return name_of(kDefNames, v); }
std::string_view to_string(GramFunction v) {
  return name_of(kFunctionNames, v);
}

Lang lang_from_string(std::string_view s) {
  return value_of(kLangNames, s, "language");
}
Pos pos_from_string(std::string_view s) {
  return value_of(kPosNames, s, "category");
}
Gender gender_from_string(std::string_view s) {
  return value_of(kGenderNames, s, "gender");
}
Number number_from_string(std::string_view s) {
  return value_of(kNumberNames, s, "number");
}
PronSubtype pron_subtype_from_string(std::string_view s) {
  return value_of(kSubtypeNames, s, "pronoun subtype");
}
SemCategory sem_from_string(std::string_view s) {
  return value_of(kSemNames, s, "semantic category");
}
Definiteness definiteness_from_string(std::string_view s) {
  return value_of(kDefNames, s, "definiteness");
}
GramFunction function_from_string(std::string_view s) {
  return value_of(kFunctionNames, s, "grammatical function");
}

}  // namespace anaforo
