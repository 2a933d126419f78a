#include "anaforo/zero_pronoun.hpp"

#include <algorithm>
#include <fstream>

#include "anaforo/error.hpp"
#include "anaforo/text.hpp"

namespace anaforo {

ImpersonalList ImpersonalList::parse(std::istream& in, const std::string& source) {
  ImpersonalList list;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    Entry e;
    auto plus = t.find('+');
    e.lemma = text::fold_case(text::trim(t.substr(0, plus)));
    if (e.lemma.empty() || text::split_ws(e.lemma).size() != 1) {
      throw ParseError(source, ln, "expected a single verb lemma");
    }
    if (plus != std::string_view::npos) {
      for (auto h : text::split(t.substr(plus + 1), '|')) {
        auto head = text::trim(h);
        if (head.empty()) throw ParseError(source, ln, "empty head lemma");
        e.heads.push_back(text::fold_case(head));
      }
    }
    list.entries_.push_back(std::move(e));
  }
  return list;
}

ImpersonalList ImpersonalList::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open impersonal list " + path);
  return parse(in, path);
}

int main_verb(const SlotStructure& tree, const Clause& clause) {
  if (clause.vg < 0) return -1;
  return tree.children[clause.vg].head;
}

bool ImpersonalList::matches(const Sentence& sentence, const SlotStructure& tree,
                             const Clause& clause) const {
  int v = main_verb(tree, clause);
  if (v < 0) return false;
  std::string lemma = text::fold_case(sentence.tokens[v].lemma);
  for (const auto& e : entries_) {
    if (e.lemma != lemma) continue;
    if (e.heads.empty()) return true;
    for (int k : clause.post) {
      const auto& node = tree.children[k];
      if (node.kind != NodeKind::NP) continue;
      std::string head = text::fold_case(sentence.tokens[node.head].lemma);
      if (std::find(e.heads.begin(), e.heads.end(), head) != e.heads.end()) {
        return true;
      }
    }
  }
  return false;
}

namespace {

bool agrees_with_verb(const SlotStructure& np, const Token& verb) {
  return person_agrees(np.person, verb.person) &&
         number_agrees(np.number, verb.number);
}

bool vg_has(const Sentence& s, const SlotStructure& vg, VerbFlags::Flag f) {
  for (int i = vg.span.begin; i < vg.span.end; ++i) {
    if (s.tokens[i].pos == Pos::Verb && s.tokens[i].verb_flags.has(f)) return true;
  }
  return false;
}

bool determinate(Gender g) { return g == Gender::Masc || g == Gender::Fem; }

}  // namespace

SubjectStatus classify_verb(const Sentence& sentence, const SlotStructure& tree,
                            const Clause& clause,
                            const ImpersonalList& impersonal) {
  if (!clause.verb) {
    throw Error("s" + std::to_string(sentence.id) + ": no finite verb in clause " +
                std::to_string(clause.index));
  }
  const Token& verb = sentence.tokens[*clause.verb];
  SubjectStatus st;
  for (auto it = clause.pre.rbegin(); it != clause.pre.rend(); ++it) {
    const auto& node = tree.children[*it];
    bool subject = false;
    if (node.kind == NodeKind::NP) {
      subject = agrees_with_verb(node, verb);
    } else if (node.kind == NodeKind::TOKEN_LEAF) {
      subject = sentence.tokens[node.head].is_pronoun(PronSubtype::Relative);
    }
    if (subject) {
      st.kind = SubjectKind::Present;
      st.child = *it;
      st.subject = node.span;
      return st;
    }
  }
  const auto& vg = tree.children[clause.vg];
  if (vg_has(sentence, vg, VerbFlags::kImpersonal) ||
      impersonal.matches(sentence, tree, clause)) {
    st.kind = SubjectKind::Impersonal;
  } else if (vg_has(sentence, vg, VerbFlags::kImperative)) {
    st.kind = SubjectKind::Imperative;
  } else {
    st.kind = SubjectKind::Omitted;
  }
  return st;
}

Gender infer_copulative_gender(const Sentence& sentence,
                               const SlotStructure& tree, const Clause& clause) {
  if (clause.vg < 0) return Gender::Unknown;
  if (!vg_has(sentence, tree.children[clause.vg], VerbFlags::kCopulative)) {
    return Gender::Unknown;
  }
  for (int k : clause.post) {
    const auto& node = tree.children[k];
    if (node.kind == NodeKind::TOKEN_LEAF) {
      const Token& t = sentence.tokens[node.head];
      if (t.pos == Pos::Adv) continue;
      if (t.pos == Pos::Adj && determinate(t.gender)) return t.gender;
      return Gender::Unknown;
    }
    if (node.kind != NodeKind::NP) return Gender::Unknown;
    const Token& head = sentence.tokens[node.head];
    bool animate = head.sem_category == SemCategory::Person ||
                   head.sem_category == SemCategory::Animal;
    if (head.is_nominal() && animate && determinate(head.gender)) {
      return head.gender;
    }
    for (const auto& c : node.children) {
      if (c.kind != NodeKind::TOKEN_LEAF) continue;
      const Token& t = sentence.tokens[c.head];
      if (t.pos == Pos::Adj && determinate(t.gender)) return t.gender;
    }
    return Gender::Unknown;
  }
  return Gender::Unknown;
}

int next_free_marker(const std::vector<ChunkedSentence>& chunked) {
  int next = 0;
  for (const auto& cs : chunked) {
    visit_nodes(cs.tree, [&](const SlotStructure& n) {
      if (n.discourse_marker != kNoMarker) {
        next = std::max(next, n.discourse_marker + 1);
      }
    });
  }
  return next;
}

ZeroDetection insert_zero_pronouns(const Document& doc,
                                   const std::vector<ChunkedSentence>& chunked,
                                   const ImpersonalList& impersonal) {
  if (doc.lang != Lang::ES) {
    throw Error("zero pronoun detection applies to Spanish documents only");
  }
  ZeroDetection out;
  int marker = next_free_marker(chunked);
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sent = doc.sentences[s];
    const auto& cs = chunked[s];
    for (const auto& clause : cs.clauses) {
      if (!clause.verb) continue;
      const Token& verb = sent.tokens[*clause.verb];
      SubjectStatus st = classify_verb(sent, cs.tree, clause, impersonal);
      VerbReport rep;
      rep.sentence = sent.id;
      rep.verb = *clause.verb;
      rep.lemma = sent.tokens[main_verb(cs.tree, clause)].lemma;
      rep.person = verb.person;
      rep.number = verb.number;
      rep.status = st.kind;
      out.verbs.push_back(rep);
      if (st.kind != SubjectKind::Omitted) continue;
      ZeroPronoun zp;
      zp.sentence = sent.id;
      zp.verb = *clause.verb;
      zp.clause = clause.index;
      zp.position = cs.tree.children[clause.vg].span.begin;
      zp.person = verb.person;
      zp.number = verb.number;
      zp.gender = infer_copulative_gender(sent, cs.tree, clause);
      zp.discourse_marker = marker++;
      out.zeros.push_back(zp);
    }
  }
  return out;
}

Taxonomy label_zero_taxonomy(const ZeroPronoun& zp, const SlotStructure& tree,
                             const Clause& clause, bool antecedent_before) {
  if (antecedent_before) return Taxonomy::Anaphoric;
  for (int k : clause.post) {
    const auto& node = tree.children[k];
    if (node.kind != NodeKind::NP) continue;
    if (person_agrees(node.person, zp.person) &&
        number_agrees(node.number, zp.number) &&
        gender_agrees(node.gender, zp.gender)) {
      return Taxonomy::Cataphoric;
    }
  }
  return Taxonomy::Exophoric;
}

std::optional<Taxonomy> label_zero_taxonomy(const ZeroPronoun& zp,
                                            const GoldAnnotations& gold) {
  const AnnotationRecord* r = gold.find(zp.locator());
  if (!r) return std::nullopt;
  return r->taxonomy();
}

}  // namespace anaforo
