#include "anaforo/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "anaforo/error.hpp"
#include "anaforo/text.hpp"

namespace anaforo {
namespace {

// A category code and the features it implies. Atoms in the tag override
// implied values of the same slot.
struct CategoryEntry {
  std::string_view code;
  Pos pos;
  Person person = kUnknownPerson;
  Number number = Number::Unknown;
  PronSubtype subtype = PronSubtype::None;
  std::uint8_t flags = 0;
  Definiteness definiteness = Definiteness::Unknown;
};

constexpr std::uint8_t kFin = VerbFlags::kFinite;
constexpr std::uint8_t kAux = VerbFlags::kAux;
constexpr std::uint8_t kCop = VerbFlags::kCopulative;

// Shared by both languages.
const CategoryEntry kGenericCategories[] = {
    {"NOUN", Pos::Noun, 3},
    {"PROPER_NOUN", Pos::ProperNoun, 3},
    {"VERB", Pos::Verb},
    {"ADJ", Pos::Adj},
    {"DET", Pos::Det},
    {"PRON", Pos::Pron},
    {"PREP", Pos::Prep},
    {"CONJ", Pos::Conj},
    {"ADV", Pos::Adv},
    {"PUNCT", Pos::Punct},
    {"OTHER", Pos::Other},
};

// EAGLES-style category codes.
const CategoryEntry kSpanishCategories[] = {
    {"NC", Pos::Noun, 3},
    {"NP", Pos::ProperNoun, 3},
    {"VM", Pos::Verb},
    {"VA", Pos::Verb, kUnknownPerson, Number::Unknown, PronSubtype::None, kAux},
    {"VS", Pos::Verb, kUnknownPerson, Number::Unknown, PronSubtype::None, kCop},
    {"AQ", Pos::Adj},
    {"AO", Pos::Adj},
    {"Z", Pos::Adj},
    {"DA", Pos::Det, kUnknownPerson, Number::Unknown, PronSubtype::None, 0,
     Definiteness::Definite},
    {"DD", Pos::Det, kUnknownPerson, Number::Unknown, PronSubtype::None, 0,
     Definiteness::Definite},
    {"DI", Pos::Det, kUnknownPerson, Number::Unknown, PronSubtype::None, 0,
     Definiteness::Indefinite},
    {"DP", Pos::Det, kUnknownPerson, Number::Unknown, PronSubtype::None, 0,
     Definiteness::Definite},
    {"PP", Pos::Pron, kUnknownPerson, Number::Unknown, PronSubtype::Personal},
    {"PD", Pos::Pron, 3, Number::Unknown, PronSubtype::Demonstrative},
    {"PR", Pos::Pron, kUnknownPerson, Number::Unknown, PronSubtype::Relative},
    {"PX", Pos::Pron, kUnknownPerson, Number::Unknown, PronSubtype::Possessive},
    {"P0", Pos::Pron, 3, Number::Unknown, PronSubtype::Reflexive},
    {"PI", Pos::Pron},
    {"SP", Pos::Prep},
    {"CC", Pos::Conj},
    {"CS", Pos::Conj},
    {"RG", Pos::Adv},
    {"RN", Pos::Adv},
    {"F", Pos::Punct},
    {"I", Pos::Other},
    {"W", Pos::Other},
};

// Penn-style category codes.
const CategoryEntry kEnglishCategories[] = {
    {"NN", Pos::Noun, 3, Number::Sg},
    {"NNS", Pos::Noun, 3, Number::Pl},
    {"NNP", Pos::ProperNoun, 3, Number::Sg},
    {"NNPS", Pos::ProperNoun, 3, Number::Pl},
    {"PRP", Pos::Pron, kUnknownPerson, Number::Unknown, PronSubtype::Personal},
    {"PRP$", Pos::Pron, kUnknownPerson, Number::Unknown,
     PronSubtype::Possessive},
    {"WP", Pos::Pron, kUnknownPerson, Number::Unknown, PronSubtype::Relative},
    {"WDT", Pos::Pron, kUnknownPerson, Number::Unknown, PronSubtype::Relative},
    {"WP$", Pos::Pron, kUnknownPerson, Number::Unknown,
     PronSubtype::Possessive},
    {"VB", Pos::Verb},
    {"VBD", Pos::Verb, kUnknownPerson, Number::Unknown, PronSubtype::None, kFin},
    {"VBZ", Pos::Verb, 3, Number::Sg, PronSubtype::None, kFin},
    {"VBP", Pos::Verb, kUnknownPerson, Number::Unknown, PronSubtype::None, kFin},
    {"VBN", Pos::Verb},
    {"VBG", Pos::Verb},
    {"MD", Pos::Verb, kUnknownPerson, Number::Unknown, PronSubtype::None,
     kFin | kAux},
    {"JJ", Pos::Adj},
    {"JJR", Pos::Adj},
    {"JJS", Pos::Adj},
    {"CD", Pos::Adj},
    {"DT", Pos::Det},
    {"PDT", Pos::Det},
    {"RB", Pos::Adv},
    {"RBR", Pos::Adv},
    {"RBS", Pos::Adv},
    {"RP", Pos::Adv},
    {"IN", Pos::Prep},
    {"TO", Pos::Prep},
    {"CC", Pos::Conj},
    {"EX", Pos::Other},
    {"UH", Pos::Other},
    {"POS", Pos::Other},
    {".", Pos::Punct},
    {",", Pos::Punct},
    {":", Pos::Punct},
    {"``", Pos::Punct},
    {"''", Pos::Punct},
    {"-LRB-", Pos::Punct},
    {"-RRB-", Pos::Punct},
};

template <std::size_t N>
const CategoryEntry* find_category(const CategoryEntry (&table)[N],
                                   std::string_view code) {
  for (const auto& e : table) {
    if (e.code == code) return &e;
  }
  return nullptr;
}

enum Slot { kGenderSlot, kNumberSlot, kPersonSlot, kSubtypeSlot, kSemSlot,
            kDefSlot, kSlotCount };

[[noreturn]] void bad_tag(std::string_view tag, const std::string& why) {
  throw Error("invalid postag '" + std::string(tag) + "': " + why);
}

}  // namespace

TagFeatures decode_tag(std::string_view tag, Lang lang) {
  if (tag.empty()) bad_tag(tag, "empty tag");
  // Penn punctuation tags may themselves contain '-' (e.g. -LRB-), so try a
  // whole-tag match first.
  const CategoryEntry* cat = nullptr;
  std::vector<std::string_view> atoms;
  if (lang == Lang::EN) cat = find_category(kEnglishCategories, tag);
  if (cat == nullptr) {
    atoms = text::split(tag, '-');
    std::string_view code = atoms.front();
    atoms.erase(atoms.begin());
    cat = find_category(kGenericCategories, code);
    if (cat == nullptr) {
      cat = lang == Lang::ES ? find_category(kSpanishCategories, code)
                             : find_category(kEnglishCategories, code);
    }
    if (cat == nullptr) bad_tag(tag, "unknown category '" + std::string(code) + "'");
  }

  TagFeatures f;
  f.pos = cat->pos;
  f.person = cat->person;
  f.number = cat->number;
  f.pron_subtype = cat->subtype;
  f.verb_flags = VerbFlags(cat->flags);
  f.definiteness = cat->definiteness;

  std::array<bool, kSlotCount> seen{};
  auto claim = [&](Slot s, std::string_view atom) {
    if (seen[s]) bad_tag(tag, "feature repeated at '" + std::string(atom) + "'");
    seen[s] = true;
  };

  for (std::string_view a : atoms) {
    if (a == "M" || a == "F" || a == "N") {
      claim(kGenderSlot, a);
      f.gender = a == "M" ? Gender::Masc : a == "F" ? Gender::Fem : Gender::Neut;
    } else if (a == "SG" || a == "PL") {
      claim(kNumberSlot, a);
      f.number = a == "SG" ? Number::Sg : Number::Pl;
    } else if (a == "1" || a == "2" || a == "3") {
      claim(kPersonSlot, a);
      f.person = a[0] - '0';
    } else if (a == "PERS" || a == "REFL" || a == "DEM" || a == "REL" ||
               a == "POSS") {
      claim(kSubtypeSlot, a);
      f.pron_subtype = a == "PERS"   ? PronSubtype::Personal
                       : a == "REFL" ? PronSubtype::Reflexive
                       : a == "DEM"  ? PronSubtype::Demonstrative
                       : a == "REL"  ? PronSubtype::Relative
                                     : PronSubtype::Possessive;
    } else if (a == "PERSON" || a == "ANIMAL" || a == "OBJECT") {
      claim(kSemSlot, a);
      f.sem_category = a == "PERSON"   ? SemCategory::Person
                       : a == "ANIMAL" ? SemCategory::Animal
                                       : SemCategory::Object;
    } else if (a == "DEF" || a == "INDEF") {
      claim(kDefSlot, a);
      f.definiteness =
          a == "DEF" ? Definiteness::Definite : Definiteness::Indefinite;
    } else if (a == "FIN") {
      f.verb_flags.set(VerbFlags::kFinite);
    } else if (a == "IMP") {
      f.verb_flags.set(VerbFlags::kImperative);
    } else if (a == "IMPERS") {
      f.verb_flags.set(VerbFlags::kImpersonal);
    } else if (a == "COP") {
      f.verb_flags.set(VerbFlags::kCopulative);
    } else if (a == "AUX") {
      f.verb_flags.set(VerbFlags::kAux);
    } else if (a == "CL") {
      f.clitic = true;
    } else {
      bad_tag(tag, "unknown feature '" + std::string(a) + "'");
    }
  }

  if (f.pron_subtype != PronSubtype::None && f.pos != Pos::Pron) {
    bad_tag(tag, "pronoun subtype on a non-pronoun");
  }
  if (!f.verb_flags.empty() && f.pos != Pos::Verb) {
    bad_tag(tag, "verb flags on a non-verb");
  }
  if (f.clitic && f.pos != Pos::Pron) bad_tag(tag, "clitic flag on a non-pronoun");
  return f;
}

// ---------------------------------------------------------------------------
// Documents.

std::string Document::header(std::string_view key) const {
  for (const auto& [k, v] : headers) {
    if (k == key) return v;
  }
  return {};
}

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

Document parse_document(std::istream& in, std::optional<Lang> lang,
                        const std::string& source) {
  struct RawLine {
    int line;
    std::string text;
  };
  // Headers can appear anywhere, so collect them before decoding tags.
  std::vector<std::vector<RawLine>> raw_sentences(1);
  std::vector<std::pair<std::string, std::string>> headers;
  std::optional<Lang> header_lang;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::starts_with(line, "# ")) {
      std::string_view body = text::trim(std::string_view(line).substr(2));
      auto colon = body.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(source, lineno, "header without ':'");
      }
      std::string key(text::trim(body.substr(0, colon)));
      std::string value(text::trim(body.substr(colon + 1)));
      if (key == "lang") {
        if (value != "ES" && value != "EN") {
          throw ParseError(source, lineno, "unknown language '" + value + "'");
        }
        header_lang = lang_from_string(value);
      } else {
        headers.emplace_back(std::move(key), std::move(value));
      }
      continue;
    }
    if (text::trim(line).empty()) {
      if (!raw_sentences.back().empty()) raw_sentences.emplace_back();
      continue;
    }
    raw_sentences.back().push_back({lineno, line});
  }
  if (raw_sentences.back().empty()) raw_sentences.pop_back();

  if (header_lang && lang && *header_lang != *lang) {
    throw ParseError(source, 1, "document language does not match request");
  }
  if (!header_lang && !lang) {
    throw ParseError(source, 1, "missing '# lang:' header");
  }

  Document doc;
  doc.lang = header_lang ? *header_lang : *lang;
  doc.headers = std::move(headers);
  for (const auto& raw : raw_sentences) {
    Sentence sent;
    sent.id = static_cast<int>(doc.sentences.size());
    for (const auto& [ln, textline] : raw) {
      auto fields = text::split(textline, '\t');
      if (fields.size() < 3 || fields.size() > 5) {
        throw ParseError(source, ln,
                         "expected 3 to 5 tab-separated fields, got " +
                             std::to_string(fields.size()));
      }
      if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
        throw ParseError(source, ln, "empty field");
      }
      Token tok;
      tok.surface = std::string(fields[0]);
      tok.lemma = std::string(fields[1]);
      tok.tag = std::string(fields[2]);
      TagFeatures f;
      try {
        f = decode_tag(tok.tag, doc.lang);
      } catch (const Error& e) {
        throw ParseError(source, ln, e.what());
      }
      tok.pos = f.pos;
      tok.person = f.person;
      tok.gender = f.gender;
      tok.number = f.number;
      tok.pron_subtype = f.pron_subtype;
      tok.verb_flags = f.verb_flags;
      tok.clitic = f.clitic;
      tok.definiteness = f.definiteness;
      if (f.sem_category != SemCategory::Unknown) {
        tok.sem_category = f.sem_category;
        tok.sem_source = SemSource::Tag;
      }
      if (fields.size() >= 4 && !fields[3].empty()) {
        SemCategory cat;
        if (fields[3] == "person") {
          cat = SemCategory::Person;
        } else if (fields[3] == "animal") {
          cat = SemCategory::Animal;
        } else if (fields[3] == "object") {
          cat = SemCategory::Object;
        } else {
          throw ParseError(source, ln,
                           "unknown semantic category '" +
                               std::string(fields[3]) + "'");
        }
        if (tok.sem_source == SemSource::Tag && tok.sem_category != cat) {
          throw ParseError(source, ln, "semantic category conflicts with tag");
        }
        tok.sem_category = cat;
        tok.sem_source = SemSource::Column;
      }
      if (fields.size() == 5) {
        if (fields[4].empty()) throw ParseError(source, ln, "empty sense field");
        tok.sense = std::string(fields[4]);
      }
      tok.index = static_cast<int>(sent.tokens.size());
      sent.tokens.push_back(std::move(tok));
    }
    doc.sentences.push_back(std::move(sent));
  }
  return doc;
}

Document parse_document_string(std::string_view text, std::optional<Lang> lang) {
  std::istringstream in{std::string(text)};
  return parse_document(in, lang, "<string>");
}

Document load_document(const std::string& path, std::optional<Lang> lang) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_document(in, lang, path);
}

std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  out << "# lang: " << to_string(doc.lang) << "\n";
  for (const auto& [k, v] : doc.headers) out << "# " << k << ": " << v << "\n";
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    if (s > 0) out << "\n";
    for (const auto& t : doc.sentences[s].tokens) {
      out << t.surface << '\t' << t.lemma << '\t' << t.tag;
      bool column = t.sem_source == SemSource::Column;
      if (column || !t.sense.empty()) {
        out << '\t';
        if (column) out << to_string(t.sem_category);
      }
      if (!t.sense.empty()) out << '\t' << t.sense;
      out << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Lexicon and dictionary.

SemCategory SemanticLexicon::lookup(std::string_view lemma) const {
  auto it = entries_.find(text::fold_case(lemma));
  return it == entries_.end() ? SemCategory::Unknown : it->second;
}

void SemanticLexicon::add(std::string_view lemma, SemCategory cat, int line) {
  std::string key = text::fold_case(lemma);
  auto [it, inserted] = entries_.emplace(key, cat);
  if (!inserted && it->second != cat) {
    throw ParseError("<lexicon>", line,
                     "conflicting category for '" + key + "'");
  }
}

namespace {

template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    fn(lineno, std::string_view(line));
  }
}

}  // namespace

SemanticLexicon load_lexicon(std::istream& in, const std::string& source) {
  SemanticLexicon lex;
  for_each_data_line(in, [&](int ln, std::string_view line) {
    auto f = text::split(line, '\t');
    if (f.size() != 2 || f[0].empty()) {
      throw ParseError(source, ln, "expected 'lemma<TAB>category'");
    }
    SemCategory cat;
    if (f[1] == "person") {
      cat = SemCategory::Person;
    } else if (f[1] == "animal") {
      cat = SemCategory::Animal;
    } else if (f[1] == "object") {
      cat = SemCategory::Object;
    } else {
      throw ParseError(source, ln, "unknown category '" + std::string(f[1]) + "'");
    }
    try {
      lex.add(f[0], cat, ln);
    } catch (const ParseError&) {
      throw ParseError(source, ln, "conflicting category for '" +
                                       std::string(f[0]) + "'");
    }
  });
  return lex;
}

SemanticLexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_lexicon(in, path);
}

Document apply_lexicon(Document doc, const SemanticLexicon& lexicon) {
  for (auto& s : doc.sentences) {
    for (auto& t : s.tokens) {
      if (t.sem_category != SemCategory::Unknown || !t.is_nominal()) continue;
      SemCategory cat = lexicon.lookup(t.lemma);
      if (cat != SemCategory::Unknown) {
        t.sem_category = cat;
        t.sem_source = SemSource::Lexicon;
      }
    }
  }
  return doc;
}

const SpanishEntry* BilingualDictionary::to_spanish(
    std::string_view en_lemma) const {
  auto it = en_to_es_.find(text::fold_case(en_lemma));
  return it == en_to_es_.end() ? nullptr : &it->second;
}

const EnglishEntry* BilingualDictionary::to_english(
    std::string_view es_lemma) const {
  auto it = es_to_en_.find(text::fold_case(es_lemma));
  return it == es_to_en_.end() ? nullptr : &it->second;
}

void BilingualDictionary::add(std::string_view en_lemma, SpanishEntry es,
                              Number en_number, int line) {
  std::string key = text::fold_case(en_lemma);
  auto it = en_to_es_.find(key);
  if (it != en_to_es_.end()) {
    const SpanishEntry& old = it->second;
    if (old.lemma != es.lemma || old.gender != es.gender ||
        old.number != es.number) {
      throw ParseError("<dict>", line, "conflicting entry for '" + key + "'");
    }
    return;
  }
  es.en_number = en_number;
  es_to_en_.emplace(text::fold_case(es.lemma), EnglishEntry{key, en_number, es.number});
  en_to_es_.emplace(std::move(key), std::move(es));
}

BilingualDictionary load_dictionary(std::istream& in, const std::string& source) {
  BilingualDictionary dict;
  for_each_data_line(in, [&](int ln, std::string_view line) {
    auto f = text::split(line, '\t');
    if (f.size() < 2 || f[0].empty() || f[1].empty()) {
      throw ParseError(source, ln, "expected 'en<TAB>es<TAB>m|f<TAB>sg|pl'");
    }
    if (f.size() < 3 || (f[2] != "m" && f[2] != "f")) {
      throw ParseError(source, ln, "missing or invalid gender field");
    }
    if (f.size() < 4 || (f[3] != "sg" && f[3] != "pl")) {
      throw ParseError(source, ln, "missing or invalid number field");
    }
    Number en_number = Number::Sg;
    if (f.size() == 5) {
      if (f[4] != "sg" && f[4] != "pl") {
        throw ParseError(source, ln, "invalid English number field");
      }
      en_number = f[4] == "sg" ? Number::Sg : Number::Pl;
    } else if (f.size() > 5) {
      throw ParseError(source, ln, "too many fields");
    }
    SpanishEntry es{std::string(f[1]), f[2] == "m" ? Gender::Masc : Gender::Fem,
                    f[3] == "sg" ? Number::Sg : Number::Pl};
    try {
      dict.add(f[0], std::move(es), en_number, ln);
    } catch (const ParseError&) {
      throw ParseError(source, ln,
                       "conflicting entry for '" + std::string(f[0]) + "'");
    }
  });
  return dict;
}

BilingualDictionary load_dictionary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_dictionary(in, path);
}

// ---------------------------------------------------------------------------
// Gold annotations.

std::string Locator::str() const {
  std::string s = "s" + std::to_string(sentence) + ".";
  if (zero) return s + "z" + std::to_string(begin);
  s += "t" + std::to_string(begin);
  if (end != begin + 1) s += "..t" + std::to_string(end - 1);
  return s;
}

std::optional<Locator> parse_locator(std::string_view s) {
  if (s.size() < 4 || s[0] != 's') return std::nullopt;
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  Locator loc;
  loc.sentence = text::parse_index(s.substr(1, dot - 1));
  if (loc.sentence < 0) return std::nullopt;
  std::string_view rest = s.substr(dot + 1);
  if (rest.empty()) return std::nullopt;
  if (rest[0] == 'z') {
    loc.zero = true;
    loc.begin = text::parse_index(rest.substr(1));
    loc.end = loc.begin + 1;
    if (loc.begin < 0) return std::nullopt;
    return loc;
  }
  if (rest[0] != 't') return std::nullopt;
  auto range = rest.find("..");
  if (range == std::string_view::npos) {
    loc.begin = text::parse_index(rest.substr(1));
    loc.end = loc.begin + 1;
  } else {
    loc.begin = text::parse_index(rest.substr(1, range - 1));
    std::string_view last = rest.substr(range + 2);
    if (last.empty() || last[0] != 't') return std::nullopt;
    int e = text::parse_index(last.substr(1));
    if (e < 0) return std::nullopt;
    loc.end = e + 1;
  }
  if (loc.begin < 0 || loc.end <= loc.begin) return std::nullopt;
  return loc;
}

std::string_view to_string(Taxonomy t) {
  switch (t) {
    case Taxonomy::Anaphoric: return "anaphoric";
    case Taxonomy::Cataphoric: return "cataphoric";
    case Taxonomy::Exophoric: return "exophoric";
  }
  return "?";
}

Taxonomy taxonomy_from_string(std::string_view s) {
  if (s == "anaphoric") return Taxonomy::Anaphoric;
  if (s == "cataphoric") return Taxonomy::Cataphoric;
  if (s == "exophoric") return Taxonomy::Exophoric;
  throw Error("unknown taxonomy '" + std::string(s) + "'");
}

std::string_view to_string(SubjectKind k) {
  switch (k) {
    case SubjectKind::Present: return "present";
    case SubjectKind::Omitted: return "omitted";
    case SubjectKind::Impersonal: return "impersonal";
    case SubjectKind::Imperative: return "imperative";
  }
  return "?";
}

SubjectKind subject_kind_from_string(std::string_view s) {
  if (s == "present") return SubjectKind::Present;
  if (s == "omitted") return SubjectKind::Omitted;
  if (s == "impersonal") return SubjectKind::Impersonal;
  if (s == "imperative") return SubjectKind::Imperative;
  throw Error("unknown subject status '" + std::string(s) + "'");
}

Taxonomy AnnotationRecord::taxonomy() const {
  if (!antecedent) return Taxonomy::Exophoric;
  const Locator& a = *antecedent;
  if (a.sentence > pronoun.sentence) return Taxonomy::Cataphoric;
  if (a.sentence == pronoun.sentence && a.begin >= pronoun.begin) {
    return Taxonomy::Cataphoric;
  }
  return Taxonomy::Anaphoric;
}

const AnnotationRecord* GoldAnnotations::find(const Locator& pronoun) const {
  for (const auto& r : records) {
    if (r.pronoun.sentence == pronoun.sentence &&
        r.pronoun.zero == pronoun.zero && r.pronoun.begin == pronoun.begin) {
      return &r;
    }
  }
  return nullptr;
}

const VerbAnnotation* GoldAnnotations::find_verb(int sentence, int token) const {
  for (const auto& v : verbs) {
    if (v.sentence == sentence && v.token == token) return &v;
  }
  return nullptr;
}

namespace {

// Returns an empty string when the locator addresses existing tokens.
std::string locator_problem(const Locator& loc, const Document& doc) {
  if (loc.sentence >= static_cast<int>(doc.sentences.size())) {
    return "points past the last sentence";
  }
  const auto& toks = doc.sentences[loc.sentence].tokens;
  if (loc.end > static_cast<int>(toks.size())) return "points past sentence end";
  if (loc.zero && toks[loc.begin].pos != Pos::Verb) return "does not address a verb";
  return {};
}

}  // namespace

GoldAnnotations load_gold(std::istream& in, const Document& doc,
                          const std::string& source) {
  GoldAnnotations gold;
  std::map<std::string, int> mention_chain;
  std::set<std::string> pronouns_seen;
  int record_no = 0;

  for_each_data_line(in, [&](int ln, std::string_view line) {
    auto t = text::trim(line);
    if (text::starts_with(t, "verb ")) {
      auto parts = text::split_ws(t);
      if (parts.size() != 4 || parts[2] != "=") {
        throw ParseError(source, ln, "expected 'verb s<i>.t<j> = status'");
      }
      auto loc = parse_locator(parts[1]);
      if (!loc || loc->zero) throw ParseError(source, ln, "bad verb locator");
      if (auto why = locator_problem(*loc, doc); !why.empty()) {
        throw ParseError(source, ln, "verb " + loc->str() + " " + why);
      }
      if (doc.sentences[loc->sentence].tokens[loc->begin].pos != Pos::Verb) {
        throw ParseError(source, ln, "verb " + loc->str() + " is not a verb");
      }
      VerbAnnotation v;
      v.line = ln;
      v.sentence = loc->sentence;
      v.token = loc->begin;
      try {
        v.status = subject_kind_from_string(parts[3]);
      } catch (const Error& e) {
        throw ParseError(source, ln, e.what());
      }
      gold.verbs.push_back(v);
      return;
    }

    if (text::starts_with(t, "mention ")) {
      auto sep = t.find("::");
      auto chain_parts = sep == std::string_view::npos
                             ? std::vector<std::string_view>{}
                             : text::split_ws(t.substr(sep + 2));
      auto loc = parse_locator(text::trim(t.substr(8, sep == std::string_view::npos ? std::string_view::npos : sep - 8)));
      if (!loc || loc->zero || chain_parts.size() != 2 || chain_parts[0] != "chain") {
        throw ParseError(source, ln, "expected 'mention s<i>.t<j>[..t<k>] :: chain N'");
      }
      if (auto why = locator_problem(*loc, doc); !why.empty()) {
        throw ParseError(source, ln, "mention " + loc->str() + " " + why);
      }
      MentionAnnotation m{ln, *loc, text::parse_index(chain_parts[1])};
      if (m.chain < 0) throw ParseError(source, ln, "bad chain id");
      auto [it, inserted] = mention_chain.emplace(loc->str(), m.chain);
      if (!inserted && it->second != m.chain) {
        throw ParseError(source, ln, "mention " + loc->str() + " appears in two chains");
      }
      gold.mentions.push_back(m);
      return;
    }

    ++record_no;
    auto fields = std::vector<std::string_view>{};
    {
      std::string_view rest = t;
      while (true) {
        auto pos = rest.find("::");
        if (pos == std::string_view::npos) {
          fields.push_back(text::trim(rest));
          break;
        }
        fields.push_back(text::trim(rest.substr(0, pos)));
        rest = rest.substr(pos + 2);
      }
    }
    auto fail = [&](const std::string& why) {
      throw ParseError(source, ln,
                       "record " + std::to_string(record_no) + ": " + why);
    };
    if (fields.size() != 3) fail("expected 'PRON -> ANTE :: TARGET :: chain N'");
    auto arrow = fields[0].find("->");
    if (arrow == std::string_view::npos) fail("missing '->'");
    auto pron = parse_locator(text::trim(fields[0].substr(0, arrow)));
    if (!pron) fail("bad pronoun locator");
    std::string_view ante_text = text::trim(fields[0].substr(arrow + 2));

    AnnotationRecord r;
    r.line = ln;
    r.pronoun = *pron;
    if (ante_text != "exophoric") {
      auto ante = parse_locator(ante_text);
      if (!ante || ante->zero) fail("bad antecedent locator");
      r.antecedent = *ante;
    }
    if (fields[1].empty()) fail("empty target");
    if (fields[1] != "-") r.target = std::string(fields[1]);
    auto chain_parts = text::split_ws(fields[2]);
    if (chain_parts.size() != 2 || chain_parts[0] != "chain") fail("bad chain field");
    r.chain = text::parse_index(chain_parts[1]);
    if (r.chain < 0) fail("bad chain id");

    if (auto why = locator_problem(r.pronoun, doc); !why.empty()) {
      fail("pronoun " + r.pronoun.str() + " " + why);
    }
    if (r.antecedent) {
      if (auto why = locator_problem(*r.antecedent, doc); !why.empty()) {
        fail("antecedent " + r.antecedent->str() + " " + why);
      }
    }
    if (!pronouns_seen.insert(r.pronoun.str()).second) {
      fail("pronoun " + r.pronoun.str() + " annotated twice");
    }
    auto note_mention = [&](const Locator& loc) {
      auto [it, inserted] = mention_chain.emplace(loc.str(), r.chain);
      if (!inserted && it->second != r.chain) {
        fail("mention " + loc.str() + " appears in two chains");
      }
    };
    note_mention(r.pronoun);
    if (r.antecedent) note_mention(*r.antecedent);
    gold.records.push_back(std::move(r));
  });
  return gold;
}

GoldAnnotations load_gold_file(const std::string& path, const Document& doc) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_gold(in, doc, path);
}

}  // namespace anaforo
