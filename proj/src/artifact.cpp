#include "anaforo/artifact.hpp"

#include "anaforo/error.hpp"
#include "json.hpp"

namespace anaforo {

using nlohmann::json;

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Document: return "document";
    case Stage::Chunk: return "chunk";
    case Stage::DetectZero: return "detect-zero";
    case Stage::Resolve: return "resolve";
    case Stage::Interlingua: return "interlingua";
    case Stage::Translate: return "translate";
  }
  return "?";
}

Stage stage_of_record(std::string_view rec) {
  if (rec == "document") return Stage::Document;
  if (rec == "sentence") return Stage::Chunk;
  if (rec == "verb" || rec == "zero" || rec == "pleonastic") return Stage::DetectZero;
  if (rec == "resolution") return Stage::Resolve;
  if (rec == "interlingua") return Stage::Interlingua;
  if (rec == "translation") return Stage::Translate;
  throw DataError("unknown record type '" + std::string(rec) + "'");
}

namespace {

json tree_json(const SlotStructure& n) {
  json j;
  j["kind"] = std::string(to_string(n.kind));
  j["span"] = {n.span.begin, n.span.end};
  j["head"] = n.head;
  if (n.kind == NodeKind::TOKEN_LEAF) return j;
  if (n.discourse_marker != kNoMarker) j["marker"] = n.discourse_marker;
  if (n.kind == NodeKind::NP) {
    j["person"] = n.person;
    j["gender"] = std::string(to_string(n.gender));
    j["number"] = std::string(to_string(n.number));
    j["sem"] = std::string(to_string(n.sem_category));
    j["def"] = std::string(to_string(n.definiteness));
    if (n.coordinated) j["coordinated"] = true;
  }
  j["children"] = json::array();
  for (const auto& c : n.children) j["children"].push_back(tree_json(c));
  return j;
}

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string document_record(const Document& source) {
  json j;
  j["rec"] = "document";
  j["id"] = source.header("id");
  j["lang"] = std::string(to_string(source.lang));
  j["text"] = serialize_document(source);
  return j.dump();
}

std::vector<std::string> chunk_records(const Analysis& a) {
  std::vector<std::string> out;
  for (std::size_t s = 0; s < a.chunked.size(); ++s) {
    json j;
    j["rec"] = "sentence";
    j["s"] = s;
    j["tree"] = tree_json(a.chunked[s].tree);
    j["clauses"] = json::array();
    for (const auto& c : a.chunked[s].clauses) {
      json jc;
      jc["index"] = c.index;
      jc["span"] = {c.span.begin, c.span.end};
      jc["verb"] = opt(c.verb);
      jc["vg"] = c.vg;
      jc["pre"] = c.pre;
      jc["post"] = c.post;
      j["clauses"].push_back(std::move(jc));
    }
    out.push_back(j.dump());
  }
  return out;
}

std::vector<std::string> detection_records(const Analysis& a) {
  std::vector<std::string> out;
  for (const auto& v : a.zero.verbs) {
    json j;
    j["rec"] = "verb";
    j["verb"] = Locator{v.sentence, false, v.verb, v.verb + 1}.str();
    j["lemma"] = v.lemma;
    j["person"] = v.person;
    j["number"] = std::string(to_string(v.number));
    j["status"] = std::string(to_string(v.status));
    out.push_back(j.dump());
  }
  for (const auto& z : a.zero.zeros) {
    json j;
    j["rec"] = "zero";
    j["id"] = z.id();
    j["clause"] = z.clause;
    j["position"] = z.position;
    j["person"] = z.person;
    j["number"] = std::string(to_string(z.number));
    j["gender"] = std::string(to_string(z.gender));
    j["marker"] = z.discourse_marker;
    out.push_back(j.dump());
  }
  for (std::size_t s = 0; s < a.pleonastic.size(); ++s) {
    for (int t : a.pleonastic[s]) {
      json j;
      j["rec"] = "pleonastic";
      j["token"] = Locator{static_cast<int>(s), false, t, t + 1}.str();
      out.push_back(j.dump());
    }
  }
  return out;
}

std::vector<std::string> resolution_records(const Analysis& a,
                                            const std::vector<Resolution>& rs,
                                            std::string_view algorithm) {
  std::vector<std::string> out;
  for (const auto& r : rs) {
    const Anaphor& an = a.anaphors[r.anaphor];
    json j;
    j["rec"] = "resolution";
    j["algo"] = std::string(algorithm);
    j["anaphor"] = an.id();
    j["kind"] = std::string(to_string(an.kind));
    j["function"] = std::string(to_string(an.function));
    j["surface"] = an.surface;
    j["chosen"] = opt(r.chosen);
    j["antecedent"] = nullptr;
    if (r.chosen) {
      int s = 0;
      if (const SlotStructure* np = a.find_np(*r.chosen, &s)) {
        j["antecedent"] = Locator{s, false, np->span.begin, np->span.end}.str();
      }
    }
    j["ranked"] = r.ranked;
    j["fired"] = r.fired;
    j["chain"] = r.chain;
    if (!r.reason.empty()) j["reason"] = r.reason;
    out.push_back(j.dump());
  }
  return out;
}

std::string interlingua_record(const InterlinguaText& ir) {
  json j;
  j["rec"] = "interlingua";
  j["ir"] = json::parse(serialize(ir));
  return j.dump();
}

std::vector<std::string> translation_records(
    const std::vector<PronounTranslation>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) {
    json j;
    j["rec"] = "translation";
    j["anaphor"] = t.anaphor;
    j["source"] = t.source;
    j["target"] = t.target;
    j["rule"] = t.rule;
    j["low_confidence"] = t.low_confidence;
    j["features"] = {{"gender", std::string(to_string(t.features.gender))},
                     {"number", std::string(to_string(t.features.number))},
                     {"sem", std::string(to_string(t.features.sem))},
                     {"how", t.features.how},
                     {"dictionary_miss", t.features.dictionary_miss}};
    out.push_back(j.dump());
  }
  return out;
}

std::vector<ArtifactDocument> read_artifact(std::istream& in,
                                            const std::string& source) {
  std::vector<ArtifactDocument> docs;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      if (!j.is_object() || !j.contains("rec") || !j["rec"].is_string()) {
        throw DataError("expected an object with a \"rec\" field");
      }
      std::string rec = j["rec"].get<std::string>();
      Stage stage = stage_of_record(rec);
      if (stage == Stage::Document) {
        ArtifactDocument d;
        d.doc = parse_document_string(j.at("text").get<std::string>(),
                                      lang_from_string(j.at("lang").get<std::string>()));
        d.lines.assign(static_cast<int>(Stage::Translate) + 1, {});
        docs.push_back(std::move(d));
      } else if (docs.empty()) {
        throw DataError("record before the first document record");
      }
      ArtifactDocument& d = docs.back();
      d.lines[static_cast<int>(stage)].push_back(line);
      if (stage == Stage::Resolve) {
        ResolutionRecord r;
        r.anaphor = j.at("anaphor").get<std::string>();
        if (!j.at("chosen").is_null()) r.chosen = j.at("chosen").get<int>();
        r.ranked = j.at("ranked").get<std::vector<int>>();
        r.fired = j.at("fired").get<std::vector<std::string>>();
        r.chain = j.at("chain").get<int>();
        if (j.contains("reason")) r.reason = j["reason"].get<std::string>();
        d.algorithm = j.at("algo").get<std::string>();
        d.resolutions.push_back(std::move(r));
      } else if (stage == Stage::Interlingua) {
        d.ir = deserialize(j.at("ir").dump());
      } else if (stage == Stage::Translate) {
        PronounTranslation t;
        t.anaphor = j.at("anaphor").get<std::string>();
        t.source = j.at("source").get<std::string>();
        t.target = j.at("target").get<std::string>();
        t.rule = j.at("rule").get<std::string>();
        t.low_confidence = j.at("low_confidence").get<bool>();
        const json& f = j.at("features");
        t.features.gender = gender_from_string(f.at("gender").get<std::string>());
        t.features.number = number_from_string(f.at("number").get<std::string>());
        t.features.sem = sem_from_string(f.at("sem").get<std::string>());
        t.features.how = f.at("how").get<std::string>();
        t.features.dictionary_miss = f.at("dictionary_miss").get<bool>();
        d.translations.push_back(std::move(t));
      }
    } catch (const ParseError& e) {
      throw ParseError(source, ln, e.what());
    } catch (const Error& e) {
      throw ParseError(source, ln, e.what());
    } catch (const json::exception& e) {
      throw ParseError(source, ln, e.what());
    }
  }
  return docs;
}

std::vector<Resolution> resolutions_from_records(
    const Analysis& a, const std::vector<ResolutionRecord>& records) {
  if (records.size() != a.anaphors.size()) {
    throw DataError("artifact has " + std::to_string(records.size()) +
                    " resolution records for " + std::to_string(a.anaphors.size()) +
                    " anaphors");
  }
  std::vector<Resolution> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.anaphor != a.anaphors[i].id()) {
      throw DataError("resolution record " + rec.anaphor + " does not match anaphor " +
                      a.anaphors[i].id());
    }
    Resolution r;
    r.anaphor = static_cast<int>(i);
    r.chosen = rec.chosen;
    r.ranked = rec.ranked;
    r.fired = rec.fired;
    r.reason = rec.reason;
    r.chain = rec.chain;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace anaforo
