#include "anaforo/resolver.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "anaforo/error.hpp"
#include "anaforo/text.hpp"

namespace anaforo {

std::string_view to_string(AnaphorKind k) {
  switch (k) {
    case AnaphorKind::Personal: return "personal";
    case AnaphorKind::Reflexive: return "reflexive";
    case AnaphorKind::Demonstrative: return "demonstrative";
    case AnaphorKind::Zero: return "zero";
  }
  return "?";
}

AnaphorKind anaphor_kind_from_string(std::string_view s) {
  for (AnaphorKind k : {AnaphorKind::Personal, AnaphorKind::Reflexive,
                        AnaphorKind::Demonstrative, AnaphorKind::Zero}) {
    if (to_string(k) == s) return k;
  }
  throw Error("unknown anaphor kind '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Preferences.

namespace {

const char* const kPreferenceIds[] = {"a", "b", "c", "d", "e", "f", "z1", "z2"};

}  // namespace

bool is_known_preference(std::string_view id) {
  for (const char* p : kPreferenceIds) {
    if (id == p) return true;
  }
  return false;
}

bool satisfies(const std::string& pref, const Anaphor& a, const Candidate& c) {
  if (pref == "a") return c.distance == 0;
  if (pref == "b") return c.repetition > 1;
  if (pref == "c") return c.precedes_verb;
  if (pref == "d") return c.proper;
  if (pref == "e") return !c.indefinite;
  if (pref == "f") return c.same_function;
  if (pref == "z1") return c.solved_zero;
  if (pref == "z2") {
    bool known = a.gender == Gender::Masc || a.gender == Gender::Fem;
    return a.zero() && known && c.gender == a.gender;
  }
  throw ConfigError("unknown preference '" + pref + "'");
}

void validate_order(const std::vector<std::string>& order) {
  std::set<std::string> seen;
  for (const auto& id : order) {
    if (!is_known_preference(id)) {
      throw ConfigError("unknown preference '" + id + "'");
    }
    if (!seen.insert(id).second) {
      throw ConfigError("preference '" + id + "' listed twice");
    }
  }
}

PreferenceOrders PreferenceOrders::defaults() {
  PreferenceOrders o;
  o.set(Lang::ES, AnaphorKind::Personal, {"a", "b", "c", "d", "e"});
  o.set(Lang::ES, AnaphorKind::Zero, {"z2", "z1", "a", "b", "c", "d", "e"});
  o.set(Lang::EN, AnaphorKind::Personal, {"f", "a", "b", "c", "d", "e"});
  return o;
}

PreferenceOrders PreferenceOrders::uniform(std::vector<std::string> order) {
  PreferenceOrders o;
  for (Lang l : {Lang::ES, Lang::EN}) {
    for (AnaphorKind k : {AnaphorKind::Personal, AnaphorKind::Reflexive,
                          AnaphorKind::Demonstrative, AnaphorKind::Zero}) {
      o.set(l, k, order);
    }
  }
  return o;
}

void PreferenceOrders::set(Lang lang, AnaphorKind kind,
                           std::vector<std::string> order) {
  validate_order(order);
  orders_[{lang, kind}] = std::move(order);
}

const std::vector<std::string>& PreferenceOrders::get(Lang lang,
                                                      AnaphorKind kind) const {
  static const std::vector<std::string> kEmpty;
  auto it = orders_.find({lang, kind});
  if (it != orders_.end()) return it->second;
  it = orders_.find({lang, AnaphorKind::Personal});
  return it != orders_.end() ? it->second : kEmpty;
}

PreferenceOrders PreferenceOrders::parse(std::istream& in,
                                         const std::string& source) {
  PreferenceOrders o = defaults();
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, ln, "missing '='");
    auto key = text::split_ws(t.substr(0, eq));
    if (key.size() != 2) {
      throw ParseError(source, ln, "expected '<LANG> <kind> = ids'");
    }
    try {
      Lang lang = lang_from_string(key[0]);
      AnaphorKind kind = anaphor_kind_from_string(key[1]);
      std::vector<std::string> ids;
      for (auto w : text::split_ws(t.substr(eq + 1))) ids.emplace_back(w);
      o.set(lang, kind, std::move(ids));
    } catch (const Error& e) {
      throw ParseError(source, ln, e.what());
    }
  }
  return o;
}

PreferenceOrders PreferenceOrders::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open preference file " + path);
  return parse(in, path);
}

// ---------------------------------------------------------------------------
// Chains.

int Chains::find(int marker) const {
  auto it = parent_.find(marker);
  if (it == parent_.end() || it->second == marker) return marker;
  int root = find(it->second);
  parent_[marker] = root;
  return root;
}

void Chains::unite(int a, int b) {
  int ra = find(a), rb = find(b);
  if (ra == rb) return;
  if (rb < ra) std::swap(ra, rb);
  parent_[ra] = ra;
  parent_[rb] = ra;
}

std::map<int, std::vector<int>> Chains::groups() const {
  std::map<int, std::vector<int>> out;
  for (const auto& [m, p] : parent_) {
    (void)p;
    out[find(m)].push_back(m);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.size() < 2) {
      it = out.erase(it);
    } else {
      std::sort(it->second.begin(), it->second.end());
      ++it;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Document structure helpers.

const SlotStructure* Analysis::find_np(int marker, int* sentence) const {
  const SlotStructure* found = nullptr;
  for (std::size_t s = 0; s < chunked.size() && !found; ++s) {
    visit_nodes(chunked[s].tree, [&](const SlotStructure& n) {
      if (!found && n.kind == NodeKind::NP && n.discourse_marker == marker) {
        found = &n;
        if (sentence) *sentence = static_cast<int>(s);
      }
    });
  }
  return found;
}

int clause_subject(const Sentence& sentence, const SlotStructure& tree,
                   const Clause& clause) {
  if (!clause.verb) return -1;
  const Token& verb = sentence.tokens[*clause.verb];
  for (auto it = clause.pre.rbegin(); it != clause.pre.rend(); ++it) {
    const auto& node = tree.children[*it];
    if (node.kind == NodeKind::NP) {
      if (person_agrees(node.person, verb.person) &&
          number_agrees(node.number, verb.number)) {
        return *it;
      }
    } else if (node.kind == NodeKind::TOKEN_LEAF &&
               sentence.tokens[node.head].is_pronoun(PronSubtype::Relative)) {
      return -1;
    }
  }
  return -1;
}

namespace {

int top_level_child(const SlotStructure& tree, int token) {
  for (std::size_t k = 0; k < tree.children.size(); ++k) {
    if (tree.children[k].span.contains(token)) return static_cast<int>(k);
  }
  return -1;
}

int clause_index(const std::vector<Clause>& clauses, int token) {
  const Clause* c = clause_of(clauses, token);
  return c ? c->index : 0;
}

bool is_en_neuter_or_plural(std::string_view surface) {
  std::string s = text::fold_case(surface);
  return s == "it" || s == "they" || s == "them" || s == "itself" ||
         s == "themselves";
}

}  // namespace

GramFunction function_at(const Sentence& sentence, const SlotStructure& tree,
                         const std::vector<Clause>& clauses, int token) {
  int k = top_level_child(tree, token);
  if (k < 0) return GramFunction::Other;
  const auto& node = tree.children[k];
  if (node.kind == NodeKind::PP) return GramFunction::Prepositional;
  if (node.kind == NodeKind::NP) {
    const Clause* c = clause_of(clauses, token);
    if (c && clause_subject(sentence, tree, *c) == k) return GramFunction::Subject;
  }
  return GramFunction::Complement;
}

// ---------------------------------------------------------------------------
// Anaphor detection.

namespace {

bool clitic_doubled(const Analysis& a, int s, const Token& clitic) {
  const auto& tree = a.tree(s);
  const Clause* c = clause_of(a.chunked[s].clauses, clitic.index);
  if (!c) return false;
  std::vector<int> members = c->pre;
  members.insert(members.end(), c->post.begin(), c->post.end());
  for (int k : members) {
    const auto& node = tree.children[k];
    if (node.kind != NodeKind::PP || node.children.size() < 2) continue;
    const auto& prep = node.children.front();
    if (prep.kind != NodeKind::TOKEN_LEAF ||
        text::fold_case(a.sentence(s).tokens[prep.head].lemma) != "a") {
      continue;
    }
    if (node.sem_category == SemCategory::Object) continue;
    if (person_agrees(node.person, clitic.person) &&
        number_agrees(node.number, clitic.number) &&
        gender_agrees(node.gender, clitic.gender)) {
      return true;
    }
  }
  return false;
}

int pronoun_np_marker(const SlotStructure& tree, int token) {
  int found = kNoMarker;
  visit_nodes(tree, [&](const SlotStructure& n) {
    if (n.kind == NodeKind::NP && n.head == token && n.span.size() == 1) {
      found = n.discourse_marker;
    }
  });
  return found;
}

}  // namespace

std::vector<Anaphor> detect_anaphors(const Analysis& a) {
  std::vector<Anaphor> out;
  int fresh = next_free_marker(a.chunked);
  for (const auto& z : a.zero.zeros) {
    fresh = std::max(fresh, z.discourse_marker + 1);
  }

  for (const auto& z : a.zero.zeros) {
    if (z.person != 3) continue;
    Anaphor an;
    an.kind = AnaphorKind::Zero;
    an.function = GramFunction::Subject;
    an.person = z.person;
    an.gender = z.gender;
    an.number = z.number;
    an.sentence = z.sentence;
    an.token = z.verb;
    an.position = z.position;
    an.clause = z.clause;
    an.discourse_marker = z.discourse_marker;
    an.surface = "∅";
    an.lemma = "∅";
    out.push_back(an);
  }

  for (std::size_t s = 0; s < a.doc.sentences.size(); ++s) {
    const auto& sent = a.doc.sentences[s];
    const auto& cs = a.chunked[s];
    const auto& pleo = s < a.pleonastic.size() ? a.pleonastic[s]
                                                : std::vector<int>{};
    for (const auto& t : sent.tokens) {
      if (t.pos != Pos::Pron || t.person != 3) continue;
      AnaphorKind kind;
      if (t.pron_subtype == PronSubtype::Personal) {
        kind = AnaphorKind::Personal;
      } else if (t.pron_subtype == PronSubtype::Reflexive) {
        kind = AnaphorKind::Reflexive;
      } else if (t.pron_subtype == PronSubtype::Demonstrative) {
        kind = AnaphorKind::Demonstrative;
      } else {
        continue;
      }
      if (std::find(pleo.begin(), pleo.end(), t.index) != pleo.end()) continue;
      GramFunction fn = function_at(sent, cs.tree, cs.clauses, t.index);
      if (a.doc.lang == Lang::ES && t.clitic && fn == GramFunction::Complement &&
          kind == AnaphorKind::Personal &&
          clitic_doubled(a, static_cast<int>(s), t)) {
        continue;
      }
      Anaphor an;
      an.kind = kind;
      an.function = fn;
      an.person = t.person;
      an.gender = t.gender;
      an.number = t.number;
      an.sentence = sent.id;
      an.token = t.index;
      an.position = t.index;
      an.clause = clause_index(cs.clauses, t.index);
      an.discourse_marker = pronoun_np_marker(cs.tree, t.index);
      if (an.discourse_marker == kNoMarker) an.discourse_marker = fresh++;
      an.surface = t.surface;
      an.lemma = t.lemma;
      out.push_back(an);
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Anaphor& x, const Anaphor& y) {
    if (x.sentence != y.sentence) return x.sentence < y.sentence;
    if (x.position != y.position) return x.position < y.position;
    return x.zero() && !y.zero();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Candidates.

ResolutionState::ResolutionState(const Analysis& a) { (void)a; }

void ResolutionState::record(const Anaphor& anaphor, const Resolution& r) {
  if (!r.chosen) return;
  chains_.unite(anaphor.discourse_marker, *r.chosen);
  resolved_.emplace_back(&anaphor, anaphor.discourse_marker);
}

namespace {

struct NodeContext {
  bool in_pp = false;
  bool top_level = false;
  bool conjunct = false;
  int top_index = -1;
};

template <typename Fn>
void visit_nps(const SlotStructure& n, NodeContext ctx, Fn&& fn) {
  if (n.kind == NodeKind::NP) fn(n, ctx);
  for (std::size_t k = 0; k < n.children.size(); ++k) {
    NodeContext child = ctx;
    if (n.kind == NodeKind::SENT) {
      child.top_level = true;
      child.top_index = static_cast<int>(k);
    } else {
      child.top_level = false;
    }
    if (n.kind == NodeKind::PP) child.in_pp = true;
    if (n.kind == NodeKind::NP && n.coordinated) child.conjunct = true;
    visit_nps(n.children[k], child, fn);
  }
}

}  // namespace

std::vector<Candidate> collect_candidates(const Analysis& a,
                                          const Anaphor& anaphor,
                                          const ResolutionState& state,
                                          int window) {
  std::vector<Candidate> out;
  int first = std::max(0, anaphor.sentence - window);

  // Prior full-NP mentions per head lemma, counted over the whole document
  // up to the anaphor.
  std::map<std::string, int> lemma_mentions;
  for (int s = 0; s <= anaphor.sentence; ++s) {
    const auto& sent = a.sentence(s);
    visit_nps(a.tree(s), {}, [&](const SlotStructure& n, const NodeContext&) {
      if (n.coordinated || !sent.tokens[n.head].is_nominal()) return;
      if (s == anaphor.sentence && n.span.end > anaphor.position) return;
      ++lemma_mentions[text::fold_case(sent.tokens[n.head].lemma)];
    });
  }

  for (int s = first; s <= anaphor.sentence; ++s) {
    const auto& sent = a.sentence(s);
    const auto& tree = a.tree(s);
    const auto& clauses = a.chunked[s].clauses;
    visit_nps(tree, {}, [&](const SlotStructure& n, const NodeContext& ctx) {
      const Token& head = sent.tokens[n.head];
      if (!head.is_nominal()) return;
      if (s == anaphor.sentence && n.span.end > anaphor.position) return;
      Candidate c;
      c.marker = n.discourse_marker;
      c.sentence = s;
      c.head = n.head;
      c.span = n.span;
      c.person = n.person;
      c.gender = n.gender;
      c.number = n.number;
      c.sem_category = n.sem_category;
      c.clause = clause_index(clauses, n.head);
      c.distance = anaphor.sentence - s;
      c.in_pp = ctx.in_pp;
      c.top_level = ctx.top_level;
      c.proper = head.pos == Pos::ProperNoun;
      c.indefinite = n.definiteness == Definiteness::Indefinite;
      c.head_lemma = head.lemma;
      if (ctx.in_pp) {
        c.function = GramFunction::Prepositional;
      } else {
        const Clause& cl = clauses[c.clause];
        c.function = clause_subject(sent, tree, cl) == ctx.top_index
                         ? GramFunction::Subject
                         : GramFunction::Complement;
      }
      const Clause& cl = clauses[c.clause];
      c.precedes_verb =
          cl.vg >= 0 && n.span.end <= tree.children[cl.vg].span.begin;
      c.same_function = c.function == anaphor.function;

      int chained = 0;
      for (const auto& [an, marker] : state.resolved()) {
        if (!state.chains().same(marker, c.marker)) continue;
        ++chained;
        if (an->sentence != anaphor.sentence) continue;
        if (an->zero()) c.solved_zero = true;
        if (an->clause == anaphor.clause) c.clause_mate = true;
      }
      int lemma_count = n.coordinated
                            ? 1
                            : lemma_mentions[text::fold_case(head.lemma)];
      c.repetition = std::max(1, lemma_count) + chained;
      c.coordinated = n.coordinated;
      out.push_back(std::move(c));
    });
  }

  // A full NP in the anaphor's clause also rules out earlier mentions with
  // the same head lemma.
  std::set<std::string> own;
  for (const auto& c : out) {
    if (c.sentence != anaphor.sentence || c.clause != anaphor.clause ||
        c.coordinated) {
      continue;
    }
    own.insert(text::fold_case(c.head_lemma));
  }
  for (auto& c : out) {
    if (c.coordinated) continue;
    if (own.count(text::fold_case(c.head_lemma))) c.clause_mate = true;
  }
  std::sort(out.begin(), out.end(), closer);
  return out;
}

// ---------------------------------------------------------------------------
// Constraints.

bool morph_compatible(const Analysis& a, const Anaphor& anaphor,
                      const Candidate& c) {
  if (!person_agrees(c.person, anaphor.person)) return false;
  if (!number_agrees(c.number, anaphor.number)) return false;
  bool skip_gender = (anaphor.zero() && anaphor.gender == Gender::Unknown) ||
                     (a.doc.lang == Lang::EN &&
                      is_en_neuter_or_plural(anaphor.surface));
  return skip_gender || gender_agrees(c.gender, anaphor.gender);
}

bool semantic_compatible(const Analysis& a, const Anaphor& anaphor,
                         const Candidate& c) {
  if (a.doc.lang != Lang::EN || anaphor.zero()) return true;
  std::string s = text::fold_case(anaphor.surface);
  if (s == "he" || s == "him" || s == "she" || s == "her" || s == "himself" ||
      s == "herself") {
    return c.sem_category == SemCategory::Person ||
           c.sem_category == SemCategory::Unknown;
  }
  if (s == "it" || s == "itself") return c.sem_category != SemCategory::Person;
  return true;
}

namespace {

// Marker of the NP a relative pronoun opening the clause refers back to.
int relative_antecedent(const Analysis& a, int s, int clause) {
  const auto& cl = a.clause(s, clause);
  const auto& tree = a.tree(s);
  const auto& toks = a.sentence(s).tokens;
  int first = -1;
  if (!cl.pre.empty()) first = cl.pre.front();
  if (cl.vg >= 0 && (first < 0 || cl.vg < first)) first = cl.vg;
  if (first < 0) return kNoMarker;
  const auto& node = tree.children[first];
  if (node.kind != NodeKind::TOKEN_LEAF ||
      !toks[node.head].is_pronoun(PronSubtype::Relative)) {
    return kNoMarker;
  }
  for (int k = first - 1; k >= 0; --k) {
    const auto& prev = tree.children[k];
    if (prev.kind == NodeKind::TOKEN_LEAF && toks[prev.head].pos == Pos::Punct) {
      continue;
    }
    if (prev.kind == NodeKind::NP) return prev.discourse_marker;
    if (prev.kind == NodeKind::PP) {
      for (const auto& c : prev.children) {
        if (c.kind == NodeKind::NP) return c.discourse_marker;
      }
    }
    return kNoMarker;
  }
  return kNoMarker;
}

std::string count_note(const char* name, std::size_t before, std::size_t after) {
  return std::string(name) + ":" + std::to_string(before) + ">" +
         std::to_string(after);
}

}  // namespace

bool syntax_excludes(const Analysis& a, const Anaphor& anaphor,
                     const Candidate& c) {
  if (anaphor.kind == AnaphorKind::Reflexive) return false;
  bool same_clause =
      c.sentence == anaphor.sentence && c.clause == anaphor.clause;
  if (same_clause || c.clause_mate) return true;
  if (c.sentence == anaphor.sentence &&
      c.marker == relative_antecedent(a, anaphor.sentence, anaphor.clause)) {
    return true;
  }
  return false;
}

std::vector<Candidate> apply_constraints(const Analysis& a,
                                         const Anaphor& anaphor,
                                         const std::vector<Candidate>& cands,
                                         const ResolverConfig& config,
                                         std::vector<std::string>* audit) {
  std::vector<Candidate> morph;
  for (const auto& c : cands) {
    if (morph_compatible(a, anaphor, c)) morph.push_back(c);
  }
  if (audit) audit->push_back(count_note("morph", cands.size(), morph.size()));

  std::vector<Candidate> syntax;
  if (anaphor.kind == AnaphorKind::Reflexive) {
    for (const auto& c : morph) {
      bool own = c.sentence == anaphor.sentence && c.clause == anaphor.clause;
      if (own || c.clause_mate) syntax.push_back(c);
    }
    if (syntax.empty()) {
      for (const auto& c : morph) {
        if (c.sentence == anaphor.sentence) syntax.push_back(c);
      }
    }
  } else {
    for (const auto& c : morph) {
      if (!syntax_excludes(a, anaphor, c)) syntax.push_back(c);
    }
  }
  if (audit) audit->push_back(count_note("syntax", morph.size(), syntax.size()));

  if (!config.semantics) return syntax;
  std::vector<Candidate> sem;
  for (const auto& c : syntax) {
    if (semantic_compatible(a, anaphor, c)) sem.push_back(c);
  }
  if (audit) audit->push_back(count_note("sem", syntax.size(), sem.size()));
  return sem;
}

// ---------------------------------------------------------------------------
// Preferences and resolution.

bool closer(const Candidate& a, const Candidate& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.head != b.head) return a.head > b.head;
  return a.marker < b.marker;
}

std::vector<Candidate> rank_preferences(const Anaphor& anaphor,
                                        const std::vector<Candidate>& cands,
                                        const std::vector<std::string>& order,
                                        std::vector<std::string>* audit) {
  validate_order(order);
  std::vector<Candidate> alive = cands;
  std::sort(alive.begin(), alive.end(), closer);
  std::vector<Candidate> discarded;
  for (const auto& pref : order) {
    std::vector<Candidate> keep, drop;
    for (const auto& c : alive) {
      (satisfies(pref, anaphor, c) ? keep : drop).push_back(c);
    }
    std::string note;
    if (keep.empty()) {
      note = pref + ":skip";
    } else if (drop.empty()) {
      note = pref + ":all";
    } else {
      note = pref + ":filter-" + std::to_string(drop.size());
      alive = std::move(keep);
      discarded.insert(discarded.end(), drop.begin(), drop.end());
    }
    if (audit) audit->push_back(std::move(note));
  }
  alive.insert(alive.end(), discarded.begin(), discarded.end());
  return alive;
}

std::vector<Resolution> resolve_with(const Analysis& a,
                                     const ResolverConfig& config,
                                     const ConstraintFilter& filter,
                                     const CandidateSelector& select) {
  std::vector<Resolution> out;
  ResolutionState state(a);
  const ConstraintFilter& apply =
      filter ? filter : ConstraintFilter(apply_constraints);
  for (std::size_t i = 0; i < a.anaphors.size(); ++i) {
    const Anaphor& an = a.anaphors[i];
    Resolution r;
    r.anaphor = static_cast<int>(i);
    auto cands = collect_candidates(a, an, state, config.window);
    auto passed = apply(a, an, cands, config, &r.fired);

    bool cataphoric = false;
    if (an.zero()) {
      bool agreeing_before = std::any_of(
          cands.begin(), cands.end(),
          [&](const Candidate& c) { return morph_compatible(a, an, c); });
      ZeroPronoun zp;
      zp.person = an.person;
      zp.number = an.number;
      zp.gender = an.gender;
      cataphoric = label_zero_taxonomy(zp, a.tree(an.sentence),
                                       a.clause(an.sentence, an.clause),
                                       agreeing_before) == Taxonomy::Cataphoric;
    }
    if (cataphoric) {
      r.reason = "cataphoric";
    } else if (passed.empty()) {
      r.reason = "no-candidates";
    } else {
      auto ranked = select(a, an, passed, &r.fired);
      for (const auto& c : ranked) r.ranked.push_back(c.marker);
      r.chosen = ranked.front().marker;
    }
    state.record(an, r);
    r.chain = state.chains().find(an.discourse_marker);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Resolution> resolve_document(const Analysis& a,
                                         const ResolverConfig& config,
                                         const ConstraintFilter& filter) {
  return resolve_with(
      a, config, filter,
      [&](const Analysis& an_a, const Anaphor& an,
          const std::vector<Candidate>& passed, std::vector<std::string>* audit) {
        return rank_preferences(an, passed,
                                config.orders.get(an_a.doc.lang, an.kind), audit);
      });
}

Chains build_chains(const Analysis& a, const std::vector<Resolution>& rs) {
  Chains chains;
  for (const auto& r : rs) {
    if (r.chosen) chains.unite(a.anaphors[r.anaphor].discourse_marker, *r.chosen);
  }
  return chains;
}

}  // namespace anaforo
