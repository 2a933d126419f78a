#include "anaforo/generator.hpp"

#include <fstream>
#include <map>
#include <set>

#include "anaforo/error.hpp"
#include "anaforo/text.hpp"

namespace anaforo {

std::string_view to_string(Direction d) {
  return d == Direction::ES2EN ? "ES2EN" : "EN2ES";
}

Direction direction_from_string(std::string_view s) {
  std::string k;
  for (char c : s) {
    if (c != '-' && c != '_' && c != '>') k += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  if (k == "ES2EN" || k == "ESEN") return Direction::ES2EN;
  if (k == "EN2ES" || k == "ENES") return Direction::EN2ES;
  throw ConfigError("unknown language pair '" + std::string(s) + "'");
}

namespace {

const char* gender_code(Gender g) { return g == Gender::Fem ? "f" : "m"; }
const char* number_code(Number n) { return n == Number::Pl ? "pl" : "sg"; }

const std::vector<std::pair<std::string, std::string>>& classes(Direction d) {
  static const std::vector<std::pair<std::string, std::string>> en2es{
      {"he", "SUBJ"},   {"she", "SUBJ"},  {"it", "SUBJ"},  {"they", "SUBJ"},
      {"him", "COMPL"}, {"her", "COMPL"}, {"it", "COMPL"}, {"them", "COMPL"},
      {"him", "PREP"},  {"her", "PREP"},  {"it", "PREP"},  {"them", "PREP"}};
  static const std::vector<std::pair<std::string, std::string>> es2en{
      {"él", "SUBJ"},   {"éste", "SUBJ"}, {"ése", "SUBJ"},  {"aquél", "SUBJ"},
      {"∅", "SUBJ"},    {"él", "PREP"},   {"éste", "PREP"}, {"ése", "PREP"},
      {"aquél", "PREP"}, {"lo", "COMPL"}, {"le", "COMPL"}};
  return d == Direction::EN2ES ? en2es : es2en;
}

}  // namespace

std::string RuleKey::str() const {
  return std::string(anaforo::to_string(direction)) + " " + pron_class + " " +
         function + " " + std::string(anaforo::to_string(sem)) + " " +
         gender_code(gender) + " " + number_code(number);
}

std::vector<RuleKey> lhs_domain() {
  std::vector<RuleKey> out;
  for (Direction d : {Direction::EN2ES, Direction::ES2EN}) {
    for (const auto& [cls, fn] : classes(d)) {
      for (SemCategory sem : {SemCategory::Person, SemCategory::Animal,
                              SemCategory::Object, SemCategory::Unknown}) {
        for (Gender g : {Gender::Masc, Gender::Fem}) {
          for (Number n : {Number::Sg, Number::Pl}) {
            out.push_back({d, cls, fn, sem, g, n});
          }
        }
      }
    }
  }
  return out;
}

RuleTable RuleTable::parse(std::istream& in, const std::string& source) {
  RuleTable t;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto s = text::trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      auto body = text::trim(s.substr(1));
      if (text::starts_with(body, "version:")) {
        t.version_ = std::string(text::trim(body.substr(8)));
      }
      continue;
    }
    auto parts = text::split_ws(s);
    if (parts.size() != 8 || parts[6] != "->") {
      throw ParseError(source, ln, "expected 'DIR CLASS FUNCTION SEM GENDER NUMBER -> TARGET'");
    }
    MorphRule r;
    r.line = ln;
    try {
      r.lhs.direction = direction_from_string(parts[0]);
      r.lhs.sem = sem_from_string(parts[3]);
    } catch (const Error& e) {
      throw ParseError(source, ln, e.what());
    }
    r.lhs.pron_class = std::string(parts[1]);
    r.lhs.function = std::string(parts[2]);
    if (r.lhs.function != "SUBJ" && r.lhs.function != "COMPL" && r.lhs.function != "PREP") {
      throw ParseError(source, ln, "bad function '" + r.lhs.function + "'");
    }
    if (parts[4] == "m") r.lhs.gender = Gender::Masc;
    else if (parts[4] == "f") r.lhs.gender = Gender::Fem;
    else throw ParseError(source, ln, "gender must be m or f");
    if (parts[5] == "sg") r.lhs.number = Number::Sg;
    else if (parts[5] == "pl") r.lhs.number = Number::Pl;
    else throw ParseError(source, ln, "number must be sg or pl");
    r.rhs = std::string(parts[7]);
    t.rules_.push_back(std::move(r));
  }
  return t;
}

RuleTable RuleTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rule table " + path);
  return parse(in, path);
}

const MorphRule* RuleTable::find(const RuleKey& key) const {
  for (const auto& r : rules_) {
    if (r.lhs == key) return &r;
  }
  return nullptr;
}

ValidationReport validate_rule_table(const RuleTable& table) {
  ValidationReport rep;
  std::map<RuleKey, int> count;
  for (const auto& r : table.rules()) ++count[r.lhs];
  auto domain = lhs_domain();
  std::set<RuleKey> in_domain(domain.begin(), domain.end());
  for (const auto& k : domain) {
    auto it = count.find(k);
    if (it == count.end()) rep.gaps.push_back(k);
    else if (it->second > 1) rep.overlaps.push_back(k);
  }
  for (const auto& [k, n] : count) {
    if (!in_domain.count(k)) rep.outside.push_back(k);
  }
  return rep;
}

TargetFeatures target_features(const IrEntity& entity, Direction direction,
                               const BilingualDictionary& dict,
                               const InterlinguaText* ir) {
  TargetFeatures f;
  f.sem = entity.sem;
  if (direction == Direction::EN2ES) {
    if (!entity.conjuncts.empty()) {
      // Masculine as soon as one conjunct is.
      f.number = Number::Pl;
      f.gender = Gender::Fem;
      f.how = "dictionary";
      for (int id : entity.conjuncts) {
        const IrEntity* c = ir ? ir->entity(id) : nullptr;
        TargetFeatures cf;
        if (c) cf = target_features(*c, direction, dict, ir);
        else cf.how = "default";
        if (cf.gender == Gender::Masc) f.gender = Gender::Masc;
        if (cf.how != "dictionary") f.how = cf.how;
        f.dictionary_miss = f.dictionary_miss || cf.dictionary_miss;
      }
      return f;
    }
    if (const SpanishEntry* es = dict.to_spanish(entity.head)) {
      f.gender = es->gender == Gender::Fem ? Gender::Fem : Gender::Masc;
      f.number = entity.number == Number::Pl ? Number::Pl : Number::Sg;
      if (es->discrepant() && entity.number == es->en_number) f.number = es->number;
      f.how = "dictionary";
      return f;
    }
    bool tagged = entity.gender == Gender::Masc || entity.gender == Gender::Fem;
    f.gender = entity.gender == Gender::Fem ? Gender::Fem : Gender::Masc;
    f.number = entity.number == Number::Pl ? Number::Pl : Number::Sg;
    // Names are not expected in the dictionary.
    f.dictionary_miss = !entity.proper;
    f.how = tagged && entity.proper ? "tag" : "default";
    return f;
  }

  bool tagged = entity.gender == Gender::Masc || entity.gender == Gender::Fem;
  f.gender = entity.gender == Gender::Fem ? Gender::Fem : Gender::Masc;
  f.number = entity.number == Number::Pl || !entity.conjuncts.empty() ? Number::Pl : Number::Sg;
  f.how = tagged ? "tag" : "default";
  if (entity.conjuncts.empty()) {
    const EnglishEntry* en = dict.to_english(entity.head);
    if (en && en->discrepant() && entity.number == en->es_number) {
      f.number = en->number;
      f.how = "dictionary";
    }
  }
  return f;
}

TargetFeatures pronoun_features(const IrPronoun& record) {
  TargetFeatures f;
  f.gender = record.gender == Gender::Fem ? Gender::Fem : Gender::Masc;
  f.number = record.number == Number::Pl ? Number::Pl : Number::Sg;
  f.sem = SemCategory::Unknown;
  f.how = "pronoun";
  return f;
}

namespace {

std::string function_code(GramFunction f) {
  switch (f) {
    case GramFunction::Subject: return "SUBJ";
    case GramFunction::Prepositional: return "PREP";
    default: return "COMPL";
  }
}

// Strips the written accent so "este" and "éste" share a class.
std::string plain(std::string s) {
  static const std::pair<const char*, const char*> kMap[] = {
      {"á", "a"}, {"é", "e"}, {"í", "i"}, {"ó", "o"}, {"ú", "u"}};
  for (const auto& [from, to] : kMap) {
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from)) {
      s.replace(p, std::string(from).size(), to);
    }
  }
  return s;
}

}  // namespace

std::optional<std::pair<std::string, std::string>> pronoun_class(
    const IrPronoun& record, Direction direction) {
  if (record.kind == AnaphorKind::Reflexive) return std::nullopt;
  std::string fn = function_code(record.function);
  std::string s = text::fold_case(record.surface);
  if (direction == Direction::EN2ES) {
    if (record.kind != AnaphorKind::Personal) return std::nullopt;
    std::string lexeme;
    if (s == "he" || s == "him") lexeme = "he";
    else if (s == "she" || s == "her") lexeme = "she";
    else if (s == "it") lexeme = "it";
    else if (s == "they" || s == "them") lexeme = "they";
    else return std::nullopt;
    if (fn == "SUBJ") return std::make_pair(lexeme, fn);
    static const std::map<std::string, std::string> kObject{
        {"he", "him"}, {"she", "her"}, {"it", "it"}, {"they", "them"}};
    return std::make_pair(kObject.at(lexeme), fn);
  }

  if (record.kind == AnaphorKind::Zero) return std::make_pair(std::string("∅"), std::string("SUBJ"));
  std::string p = plain(s);
  if (record.kind == AnaphorKind::Demonstrative) {
    std::string cls;
    if (text::starts_with(p, "est")) cls = "éste";
    else if (text::starts_with(p, "es")) cls = "ése";
    else if (text::starts_with(p, "aquel")) cls = "aquél";
    else return std::nullopt;
    return std::make_pair(cls, fn == "SUBJ" ? fn : std::string("PREP"));
  }
  if (p == "el" || p == "ella" || p == "ellos" || p == "ellas" || p == "ello") {
    return std::make_pair(std::string("él"), fn == "SUBJ" ? fn : std::string("PREP"));
  }
  if (p == "lo" || p == "la" || p == "los" || p == "las") {
    return std::make_pair(std::string("lo"), std::string("COMPL"));
  }
  if (p == "le" || p == "les" || p == "se") {
    return std::make_pair(std::string("le"), std::string("COMPL"));
  }
  return std::nullopt;
}

PronounTranslation translate_pronoun(const IrPronoun& record,
                                     const TargetFeatures& features,
                                     Direction direction, const RuleTable& table,
                                     const GeneratorConfig& config) {
  PronounTranslation t;
  t.anaphor = record.anaphor;
  t.source = record.surface;
  t.features = features;
  t.low_confidence = !record.entity || features.dictionary_miss;
  auto cls = pronoun_class(record, direction);
  if (!cls) {
    t.target = kUntranslatable;
    return t;
  }
  RuleKey key{direction, cls->first, cls->second, features.sem, features.gender,
              features.number};
  const MorphRule* rule = table.find(key);
  if (!rule) throw ConfigError("rule table has no row for " + key.str());
  t.rule = key.str();
  t.target = rule->rhs;
  if (config.drop_spanish_subjects && direction == Direction::EN2ES &&
      key.function == "SUBJ") {
    static const std::set<std::string> kOvert{"él", "ella", "ellos", "ellas"};
    if (kOvert.count(t.target)) t.target = "∅";
  }
  if (record.initial && t.target != "∅" && t.target != kUntranslatable) {
    t.target = text::capitalize(t.target);
  }
  return t;
}

std::vector<PronounTranslation> translate(const InterlinguaText& ir,
                                          const BilingualDictionary& dict,
                                          const RuleTable& table,
                                          const GeneratorConfig& config) {
  Direction d = direction_for(ir.lang);
  std::vector<PronounTranslation> out;
  for (const auto& p : ir.pronouns) {
    const IrEntity* e = p.entity ? ir.entity(*p.entity) : nullptr;
    TargetFeatures f = e ? target_features(*e, d, dict, &ir) : pronoun_features(p);
    out.push_back(translate_pronoun(p, f, d, table, config));
  }
  return out;
}

}  // namespace anaforo
