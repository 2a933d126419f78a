#include "anaforo/interlingua.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "anaforo/text.hpp"
#include "json.hpp"

namespace anaforo {

using nlohmann::json;

const IrEntity* InterlinguaText::entity(int id) const {
  auto it = std::lower_bound(entities.begin(), entities.end(), id,
                             [](const IrEntity& e, int v) { return e.id < v; });
  return it != entities.end() && it->id == id ? &*it : nullptr;
}

namespace {

using MentionKey = std::tuple<int, int, int, bool>;

MentionKey key_of(const Locator& l) { return {l.sentence, l.begin, l.end, l.zero}; }

std::string span_text(const Sentence& s, const Span& span) {
  std::string out;
  for (int i = span.begin; i < span.end; ++i) {
    if (!out.empty()) out += ' ';
    out += s.tokens[i].surface;
  }
  return out;
}

bool is_negation(const Token& t) {
  static const std::set<std::string> kNeg{"no", "not", "n't", "nunca", "never", "jamás"};
  return kNeg.count(text::fold_case(t.lemma)) > 0;
}

int first_word(const Sentence& s) {
  for (const auto& t : s.tokens) {
    if (t.pos != Pos::Punct) return t.index;
  }
  return 0;
}

void put_role(std::map<std::string, RoleValue>& roles, const std::string& name,
              RoleValue v) {
  std::string key = name;
  for (int n = 2; roles.count(key); ++n) key = name + "#" + std::to_string(n);
  roles.emplace(key, std::move(v));
}

}  // namespace

InterlinguaText build_interlingua(const Analysis& a,
                                  const std::vector<Resolution>& rs) {
  InterlinguaText ir;
  ir.lang = a.doc.lang;
  ir.id = a.doc.header("id");
  Chains chains = build_chains(a, rs);

  // Entities from full NPs, in textual order.
  std::map<int, IrEntity> entities;
  std::map<int, std::vector<std::pair<MentionKey, std::string>>> mentions;
  for (std::size_t s = 0; s < a.chunked.size(); ++s) {
    const auto& sent = a.sentence(static_cast<int>(s));
    std::vector<const SlotStructure*> nps;
    visit_nodes(a.tree(static_cast<int>(s)), [&](const SlotStructure& n) {
      if (n.kind != NodeKind::NP || n.head < 0) return;
      if (!n.coordinated && !sent.tokens[n.head].is_nominal()) return;
      nps.push_back(&n);
    });
    std::stable_sort(nps.begin(), nps.end(), [](const SlotStructure* x, const SlotStructure* y) {
      if (x->span.begin != y->span.begin) return x->span.begin < y->span.begin;
      return x->span.end > y->span.end;
    });
    for (const SlotStructure* n : nps) {
      int id = chains.find(n->discourse_marker);
      Locator loc{static_cast<int>(s), false, n->span.begin, n->span.end};
      mentions[id].emplace_back(key_of(loc), loc.str());
      if (entities.count(id)) continue;
      const Token& head = sent.tokens[n->head];
      IrEntity e;
      e.id = id;
      e.head = head.lemma;
      e.surface = head.surface;
      e.gender = n->gender;
      e.number = n->number;
      e.sem = n->sem_category;
      e.proper = head.pos == Pos::ProperNoun;
      if (n->coordinated) {
        for (const auto& c : n->children) {
          if (c.kind == NodeKind::NP) e.conjuncts.push_back(chains.find(c.discourse_marker));
        }
      }
      entities.emplace(id, std::move(e));
    }
  }
  for (const auto& an : a.anaphors) {
    int id = chains.find(an.discourse_marker);
    if (entities.count(id)) mentions[id].emplace_back(key_of(an.locator()), an.id());
  }
  for (auto& [id, e] : entities) {
    auto& ms = mentions[id];
    std::sort(ms.begin(), ms.end());
    for (const auto& m : ms) e.mentions.push_back(m.second);
    ir.entities.push_back(e);
  }

  auto value_of = [&](int s, const SlotStructure& np) {
    RoleValue v;
    int id = chains.find(np.discourse_marker);
    v.span = Locator{s, false, np.span.begin, np.span.end}.str();
    if (entities.count(id)) v.entity = id;
    else v.text = span_text(a.sentence(s), np.span);
    return v;
  };

  for (std::size_t s = 0; s < a.chunked.size(); ++s) {
    int si = static_cast<int>(s);
    const auto& sent = a.sentence(si);
    const auto& tree = a.tree(si);
    for (const auto& cl : a.chunked[s].clauses) {
      IrClause c;
      c.id = "s" + std::to_string(si) + ".c" + std::to_string(cl.index);
      c.span = Locator{si, false, cl.span.begin, cl.span.end}.str();
      for (int i = cl.span.begin; i < cl.span.end; ++i) {
        if (is_negation(sent.tokens[i])) c.polarity = "negative";
      }
      if (!cl.verb || cl.vg < 0) {
        ir.clauses.push_back(std::move(c));
        continue;
      }
      const Token& main = sent.tokens[main_verb(tree, cl)];
      c.verb = main.lemma;
      c.sense = main.sense.empty() ? main.lemma : main.sense;
      VerbFlags f = sent.tokens[*cl.verb].verb_flags;
      std::set<std::string> flags;
      if (f.finite()) flags.insert("finite");
      if (f.imperative()) flags.insert("imperative");
      if (f.impersonal()) flags.insert("impersonal");
      if (f.copulative() || main.verb_flags.copulative()) flags.insert("copulative");
      for (const auto& v : a.zero.verbs) {
        if (v.sentence == si && v.verb == *cl.verb && v.status == SubjectKind::Impersonal) {
          flags.insert("impersonal");
        }
      }
      c.flags.assign(flags.begin(), flags.end());

      int subj = clause_subject(sent, tree, cl);
      if (subj >= 0) {
        put_role(c.roles, "agent", value_of(si, tree.children[subj]));
      } else {
        for (const auto& an : a.anaphors) {
          if (!an.zero() || an.sentence != si || an.clause != cl.index) continue;
          RoleValue v;
          v.span = an.id();
          int id = chains.find(an.discourse_marker);
          if (entities.count(id)) v.entity = id;
          else v.text = "∅";
          put_role(c.roles, "agent", v);
        }
      }
      std::vector<int> members = cl.pre;
      members.insert(members.end(), cl.post.begin(), cl.post.end());
      std::sort(members.begin(), members.end());
      bool theme = false;
      for (int k : members) {
        if (k == subj) continue;
        const auto& node = tree.children[k];
        if (node.kind == NodeKind::NP) {
          put_role(c.roles, theme ? "other(np)" : "theme", value_of(si, node));
          theme = true;
        } else if (node.kind == NodeKind::PP) {
          auto np = std::find_if(node.children.begin(), node.children.end(),
                                 [](const SlotStructure& x) { return x.kind == NodeKind::NP; });
          if (np == node.children.end()) continue;
          std::string prep = text::fold_case(sent.tokens[node.span.begin].lemma);
          put_role(c.roles, "other(" + prep + ")", value_of(si, *np));
        }
      }
      ir.clauses.push_back(std::move(c));
    }
  }

  for (const auto& r : rs) {
    const Anaphor& an = a.anaphors[r.anaphor];
    IrPronoun p;
    p.anaphor = an.id();
    int id = chains.find(an.discourse_marker);
    if (r.chosen && entities.count(id)) p.entity = id;
    if (r.chosen) {
      int s = 0;
      if (const SlotStructure* np = a.find_np(*r.chosen, &s)) {
        p.antecedent = Locator{s, false, np->span.begin, np->span.end}.str();
      }
    }
    p.function = an.function;
    p.kind = an.kind;
    p.surface = an.surface;
    p.lemma = an.lemma;
    p.person = an.person;
    p.gender = an.gender;
    p.number = an.number;
    p.initial = an.position <= first_word(a.sentence(an.sentence));
    p.reason = r.reason;
    ir.pronouns.push_back(std::move(p));
  }
  return ir;
}

// ---------------------------------------------------------------------------
// JSON.

namespace {

json to_json_value(const RoleValue& v) {
  json j;
  j["span"] = v.span;
  if (v.entity) j["entity"] = *v.entity;
  else j["text"] = v.text;
  return j;
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json opt_str(const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); }

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& msg) const { throw IrError(path_, msg); }

  Reader at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) throw IrError(path_ + "/" + key, "missing");
    return Reader(*it, path_ + "/" + key);
  }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }
  bool null() const { return j_.is_null(); }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  int integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<int>();
  }
  bool boolean() const {
    if (!j_.is_boolean()) fail("expected a boolean");
    return j_.get<bool>();
  }
  std::optional<int> opt_integer() const {
    if (null()) return std::nullopt;
    return integer();
  }
  std::optional<std::string> opt_str() const {
    if (null()) return std::nullopt;
    return str();
  }
  std::vector<Reader> items() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<Reader> out;
    for (std::size_t i = 0; i < j_.size(); ++i) {
      out.emplace_back(j_[i], path_ + "/" + std::to_string(i));
    }
    return out;
  }
  std::vector<std::pair<std::string, Reader>> members() const {
    if (!j_.is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Reader>> out;
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      out.emplace_back(it.key(), Reader(it.value(), path_ + "/" + it.key()));
    }
    return out;
  }
  template <typename T, typename Fn>
  T decode(Fn fn) const {
    try {
      return fn(str());
    } catch (const IrError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }

 private:
  const json& j_;
  std::string path_;
};

}  // namespace

std::string serialize(const InterlinguaText& ir) {
  json j;
  j["irv"] = kInterlinguaVersion;
  j["lang"] = std::string(to_string(ir.lang));
  j["id"] = ir.id;
  j["clauses"] = json::array();
  for (const auto& c : ir.clauses) {
    json jc;
    jc["id"] = c.id;
    jc["verb"] = opt_str(c.verb);
    jc["sense"] = c.sense;
    jc["flags"] = c.flags;
    jc["polarity"] = c.polarity;
    jc["span"] = c.span;
    jc["roles"] = json::object();
    for (const auto& [k, v] : c.roles) jc["roles"][k] = to_json_value(v);
    j["clauses"].push_back(std::move(jc));
  }
  j["entities"] = json::array();
  for (const auto& e : ir.entities) {
    json je;
    je["id"] = e.id;
    je["head"] = e.head;
    je["surface"] = e.surface;
    je["gender"] = std::string(to_string(e.gender));
    je["number"] = std::string(to_string(e.number));
    je["sem"] = std::string(to_string(e.sem));
    je["proper"] = e.proper;
    je["conjuncts"] = e.conjuncts;
    je["mentions"] = e.mentions;
    j["entities"].push_back(std::move(je));
  }
  j["pronouns"] = json::array();
  for (const auto& p : ir.pronouns) {
    json jp;
    jp["anaphor"] = p.anaphor;
    jp["entity"] = opt_int(p.entity);
    jp["antecedent"] = opt_str(p.antecedent);
    jp["function"] = std::string(to_string(p.function));
    jp["kind"] = std::string(to_string(p.kind));
    jp["surface"] = p.surface;
    jp["lemma"] = p.lemma;
    jp["person"] = p.person;
    jp["gender"] = std::string(to_string(p.gender));
    jp["number"] = std::string(to_string(p.number));
    jp["initial"] = p.initial;
    if (!p.reason.empty()) jp["reason"] = p.reason;
    j["pronouns"].push_back(std::move(jp));
  }
  return j.dump();
}

InterlinguaText deserialize(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw IrError("", std::string("not JSON: ") + e.what());
  }
  Reader root(j, "");
  int v = root.at("irv").integer();
  if (v != kInterlinguaVersion) {
    throw IrError("/irv", "version " + std::to_string(v) + " is not supported (expected " +
                              std::to_string(kInterlinguaVersion) + ")");
  }
  InterlinguaText ir;
  ir.lang = root.at("lang").decode<Lang>(lang_from_string);
  ir.id = root.at("id").str();
  for (const auto& rc : root.at("clauses").items()) {
    IrClause c;
    c.id = rc.at("id").str();
    c.verb = rc.at("verb").opt_str();
    c.sense = rc.at("sense").str();
    for (const auto& f : rc.at("flags").items()) c.flags.push_back(f.str());
    c.polarity = rc.at("polarity").str();
    c.span = rc.at("span").str();
    for (const auto& [k, rv] : rc.at("roles").members()) {
      RoleValue val;
      val.span = rv.at("span").str();
      if (rv.has("entity")) val.entity = rv.at("entity").integer();
      else val.text = rv.at("text").str();
      c.roles.emplace(k, std::move(val));
    }
    ir.clauses.push_back(std::move(c));
  }
  std::set<int> ids;
  for (const auto& re : root.at("entities").items()) {
    IrEntity e;
    e.id = re.at("id").integer();
    if (!ids.insert(e.id).second) re.at("id").fail("duplicate entity id");
    if (!ir.entities.empty() && e.id < ir.entities.back().id) {
      re.at("id").fail("entities out of order");
    }
    e.head = re.at("head").str();
    e.surface = re.at("surface").str();
    e.gender = re.at("gender").decode<Gender>(gender_from_string);
    e.number = re.at("number").decode<Number>(number_from_string);
    e.sem = re.at("sem").decode<SemCategory>(sem_from_string);
    e.proper = re.at("proper").boolean();
    for (const auto& c : re.at("conjuncts").items()) e.conjuncts.push_back(c.integer());
    auto ms = re.at("mentions").items();
    if (ms.empty()) re.at("mentions").fail("an entity needs at least one mention");
    for (const auto& m : ms) e.mentions.push_back(m.str());
    ir.entities.push_back(std::move(e));
  }
  for (const auto& rp : root.at("pronouns").items()) {
    IrPronoun p;
    p.anaphor = rp.at("anaphor").str();
    p.entity = rp.at("entity").opt_integer();
    p.antecedent = rp.at("antecedent").opt_str();
    p.function = rp.at("function").decode<GramFunction>(function_from_string);
    p.kind = rp.at("kind").decode<AnaphorKind>(anaphor_kind_from_string);
    p.surface = rp.at("surface").str();
    p.lemma = rp.at("lemma").str();
    p.person = rp.at("person").integer();
    p.gender = rp.at("gender").decode<Gender>(gender_from_string);
    p.number = rp.at("number").decode<Number>(number_from_string);
    p.initial = rp.at("initial").boolean();
    if (rp.has("reason")) p.reason = rp.at("reason").str();
    ir.pronouns.push_back(std::move(p));
  }

  // Referential integrity.
  auto check = [&](int id, const std::string& path) {
    if (!ids.count(id)) throw IrError(path, "unknown entity " + std::to_string(id));
  };
  for (std::size_t i = 0; i < ir.clauses.size(); ++i) {
    for (const auto& [k, v] : ir.clauses[i].roles) {
      if (v.entity) check(*v.entity, "/clauses/" + std::to_string(i) + "/roles/" + k + "/entity");
    }
  }
  for (std::size_t i = 0; i < ir.entities.size(); ++i) {
    for (std::size_t k = 0; k < ir.entities[i].conjuncts.size(); ++k) {
      check(ir.entities[i].conjuncts[k],
            "/entities/" + std::to_string(i) + "/conjuncts/" + std::to_string(k));
    }
  }
  for (std::size_t i = 0; i < ir.pronouns.size(); ++i) {
    if (ir.pronouns[i].entity) check(*ir.pronouns[i].entity, "/pronouns/" + std::to_string(i) + "/entity");
  }
  return ir;
}

}  // namespace anaforo
