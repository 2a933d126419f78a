#ifndef ANAFORO_TYPES_HPP_
#define ANAFORO_TYPES_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace anaforo {

enum class Lang { ES, EN };

enum class Pos {
  Noun,
  ProperNoun,
  Verb,
  Adj,
  Det,
  Pron,
  Prep,
  Conj,
  Adv,
  Punct,
  Other,
};

enum class Gender { Masc, Fem, Neut, Unknown };
enum class Number { Sg, Pl, Unknown };

// Person is 1, 2 or 3; 0 means not known.
using Person = int;
constexpr Person kUnknownPerson = 0;

enum class PronSubtype {
  None,
  Personal,
  Reflexive,
  Demonstrative,
  Relative,
  Possessive,
};

enum class SemCategory { Person, Animal, Object, Unknown };

enum class Definiteness { Unknown, Definite, Indefinite };

// Verb flag set, stored as a bitmask.
class VerbFlags {
 public:
  enum Flag : std::uint8_t {
    kFinite = 1 << 0,
    kImperative = 1 << 1,
    kImpersonal = 1 << 2,
    kCopulative = 1 << 3,
    kAux = 1 << 4,
  };

  constexpr VerbFlags() = default;
  constexpr explicit VerbFlags(std::uint8_t bits) : bits_(bits) {}

  constexpr bool has(Flag f) const { return (bits_ & f) != 0; }
  constexpr void set(Flag f) { bits_ |= f; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  bool finite() const { return has(kFinite); }
  bool imperative() const { return has(kImperative); }
  bool impersonal() const { return has(kImpersonal); }
  bool copulative() const { return has(kCopulative); }
  bool aux() const { return has(kAux); }

  friend constexpr bool operator==(VerbFlags, VerbFlags) = default;

 private:
  std::uint8_t bits_ = 0;
};

// Grammatical function of a pronoun or NP mention. Prepositional covers
// objects of a preposition, which take the strong pronoun series in Spanish.
enum class GramFunction { Subject, Complement, Prepositional, Other };

// Half-open token range [begin, end) inside one sentence.
struct Span {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool contains(int i) const { return i >= begin && i < end; }
  bool contains(const Span& o) const { return o.begin >= begin && o.end <= end; }
  friend bool operator==(const Span&, const Span&) = default;
};

std::string_view to_string(Lang v);
std::string_view to_string(Pos v);
std::string_view to_string(Gender v);
std::string_view to_string(Number v);
std::string_view to_string(PronSubtype v);
std::string_view to_string(SemCategory v);
std::string_view to_string(Definiteness v);
std::string_view to_string(GramFunction v);

// Inverse of to_string; throw anaforo::Error on unknown names.
Lang lang_from_string(std::string_view s);
Pos pos_from_string(std::string_view s);
Gender gender_from_string(std::string_view s);
Number number_from_string(std::string_view s);
PronSubtype pron_subtype_from_string(std::string_view s);
SemCategory sem_from_string(std::string_view s);
Definiteness definiteness_from_string(std::string_view s);
GramFunction function_from_string(std::string_view s);

// Agreement helpers: Unknown matches anything.
inline bool person_agrees(Person a, Person b) {
  return a == kUnknownPerson || b == kUnknownPerson || a == b;
}
inline bool number_agrees(Number a, Number b) {
  return a == Number::Unknown || b == Number::Unknown || a == b;
}
inline bool gender_agrees(Gender a, Gender b) {
  return a == Gender::Unknown || b == Gender::Unknown || a == b;
}

}  // namespace anaforo

#endif  // ANAFORO_TYPES_HPP_
