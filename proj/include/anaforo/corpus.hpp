#ifndef ANAFORO_CORPUS_HPP_
#define ANAFORO_CORPUS_HPP_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anaforo/types.hpp"

namespace anaforo {

// Morphological features decoded from a POSTAG string.
struct TagFeatures {
  Pos pos = Pos::Other;
  Person person = kUnknownPerson;
  Gender gender = Gender::Unknown;
  Number number = Number::Unknown;
  PronSubtype pron_subtype = PronSubtype::None;
  VerbFlags verb_flags;
  bool clitic = false;
  Definiteness definiteness = Definiteness::Unknown;
  SemCategory sem_category = SemCategory::Unknown;

  friend bool operator==(const TagFeatures&, const TagFeatures&) = default;
};

// Decodes `CAT[-ATOM]*`. CAT is a generic category name (NOUN, VERB, ...),
// an EAGLES-style code for Spanish (NC, VM, PP, ...) or a Penn-style code for
// English (NN, VBD, PRP, ...). Atoms may appear in any order; each feature
// slot may be set at most once. Throws Error naming the tag when a category
// or atom is not in the table.
TagFeatures decode_tag(std::string_view tag, Lang lang);

enum class SemSource { None, Tag, Column, Lexicon };

struct Token {
  std::string surface;
  std::string lemma;
  std::string tag;
  Pos pos = Pos::Other;
  Person person = kUnknownPerson;
  Gender gender = Gender::Unknown;
  Number number = Number::Unknown;
  PronSubtype pron_subtype = PronSubtype::None;
  VerbFlags verb_flags;
  bool clitic = false;
  Definiteness definiteness = Definiteness::Unknown;
  SemCategory sem_category = SemCategory::Unknown;
  SemSource sem_source = SemSource::None;
  std::string sense;  // optional sense key (fifth column)
  int index = 0;

  bool is_nominal() const {
    return pos == Pos::Noun || pos == Pos::ProperNoun;
  }
  bool is_pronoun(PronSubtype s) const {
    return pos == Pos::Pron && pron_subtype == s;
  }

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  int id = 0;
  std::vector<Token> tokens;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  Lang lang = Lang::ES;
  // `# key: value` headers other than lang, in file order.
  std::vector<std::pair<std::string, std::string>> headers;
  std::vector<Sentence> sentences;

  std::string header(std::string_view key) const;
  std::size_t token_count() const;

  friend bool operator==(const Document&, const Document&) = default;
};

// Parses the tagged-text format. `lang` may be omitted when the stream
// carries a `# lang:` header; when both are present they must match.
Document parse_document(std::istream& in, std::optional<Lang> lang,
                        const std::string& source = "<input>");
Document parse_document_string(std::string_view text, std::optional<Lang> lang);
Document load_document(const std::string& path, std::optional<Lang> lang = {});

// Writes the tagged-text format; parse_document inverts it exactly.
std::string serialize_document(const Document& doc);

// ---------------------------------------------------------------------------
// Semantic lexicon and bilingual dictionary.

class SemanticLexicon {
 public:
  // Case-insensitive; unknown lemmas map to SemCategory::Unknown.
  SemCategory lookup(std::string_view lemma) const;
  void add(std::string_view lemma, SemCategory cat, int line = 0);
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, SemCategory, std::less<>> entries_;
};

SemanticLexicon load_lexicon(std::istream& in,
                             const std::string& source = "<lexicon>");
SemanticLexicon load_lexicon_file(const std::string& path);

// Fills tokens whose category is still unknown from the lexicon.
Document apply_lexicon(Document doc, const SemanticLexicon& lexicon);

struct SpanishEntry {
  std::string lemma;
  Gender gender = Gender::Masc;  // masc or fem
  Number number = Number::Sg;
  Number en_number = Number::Sg;  // number of the English lemma

  // The two languages disagree on number (people pl, gente sg).
  bool discrepant() const { return number != en_number; }
};

struct EnglishEntry {
  std::string lemma;
  Number number = Number::Sg;
  Number es_number = Number::Sg;

  bool discrepant() const { return number != es_number; }
};

class BilingualDictionary {
 public:
  const SpanishEntry* to_spanish(std::string_view en_lemma) const;
  const EnglishEntry* to_english(std::string_view es_lemma) const;

  // Adds `en -> es`; the inverse map keeps the first entry for each
  // Spanish lemma. Throws on a conflicting duplicate English key.
  void add(std::string_view en_lemma, SpanishEntry es, Number en_number,
           int line = 0);
  std::size_t size() const { return en_to_es_.size(); }

 private:
  std::map<std::string, SpanishEntry, std::less<>> en_to_es_;
  std::map<std::string, EnglishEntry, std::less<>> es_to_en_;
};

// `en<TAB>es<TAB>m|f<TAB>sg|pl[<TAB>en-number]`. The optional fifth column
// gives the English number; it defaults to sg.
BilingualDictionary load_dictionary(std::istream& in,
                                    const std::string& source = "<dict>");
BilingualDictionary load_dictionary_file(const std::string& path);

// ---------------------------------------------------------------------------
// Gold annotations.

// `s<i>.t<j>`, `s<i>.t<j>..t<k>` or `s<i>.z<v>` (zero pronoun before verb v).
struct Locator {
  int sentence = 0;
  bool zero = false;
  int begin = 0;  // token index, or verb index for zero slots
  int end = 1;    // exclusive

  std::string str() const;
  friend bool operator==(const Locator&, const Locator&) = default;
  friend auto operator<=>(const Locator&, const Locator&) = default;
};

std::optional<Locator> parse_locator(std::string_view s);

enum class Taxonomy { Anaphoric, Cataphoric, Exophoric };
std::string_view to_string(Taxonomy t);
Taxonomy taxonomy_from_string(std::string_view s);

enum class SubjectKind { Present, Omitted, Impersonal, Imperative };
std::string_view to_string(SubjectKind k);
SubjectKind subject_kind_from_string(std::string_view s);

struct AnnotationRecord {
  int line = 0;
  Locator pronoun;
  std::optional<Locator> antecedent;  // empty for exophoric
  std::optional<std::string> target;  // "∅" is a valid target; empty = none
  int chain = 0;

  // Cataphoric when the antecedent follows the pronoun.
  Taxonomy taxonomy() const;
};

struct VerbAnnotation {
  int line = 0;
  int sentence = 0;
  int token = 0;
  SubjectKind status = SubjectKind::Present;
};

struct MentionAnnotation {
  int line = 0;
  Locator span;
  int chain = 0;
};

struct GoldAnnotations {
  std::vector<AnnotationRecord> records;
  std::vector<VerbAnnotation> verbs;
  std::vector<MentionAnnotation> mentions;

  const AnnotationRecord* find(const Locator& pronoun) const;
  const VerbAnnotation* find_verb(int sentence, int token) const;
};

// Record lines: `PRON -> ANTE :: TARGET :: chain N` where ANTE is a locator
// or `exophoric` and TARGET is a pronoun, `∅`, or `-` (no target).
// Verb lines: `verb s<i>.t<j> = present|omitted|impersonal|imperative`.
// Mention lines: `mention s<i>.t<j>[..t<k>] :: chain N` list NP mentions.
GoldAnnotations load_gold(std::istream& in, const Document& doc,
                          const std::string& source = "<gold>");
GoldAnnotations load_gold_file(const std::string& path, const Document& doc);

}  // namespace anaforo

#endif  // ANAFORO_CORPUS_HPP_
