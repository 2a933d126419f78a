#include "anaforo/chunker.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "anaforo/error.hpp"
#include "anaforo/text.hpp"

namespace anaforo {

std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::NP: return "NP";
    case NodeKind::PP: return "PP";
    case NodeKind::VG: return "VG";
    case NodeKind::CLAUSE: return "CLAUSE";
    case NodeKind::SENT: return "SENT";
    case NodeKind::TOKEN_LEAF: return "TOKEN_LEAF";
  }
  return "?";
}

NodeKind node_kind_from_string(std::string_view s) {
  for (NodeKind k : {NodeKind::NP, NodeKind::PP, NodeKind::VG, NodeKind::CLAUSE,
                     NodeKind::SENT, NodeKind::TOKEN_LEAF}) {
    if (to_string(k) == s) return k;
  }
  throw Error("unknown node kind '" + std::string(s) + "'");
}

namespace {

const char* const kFeatureNames[] = {
    "personal", "reflexive", "demonstrative", "relative", "possessive",
    "clitic",   "finite",    "imperative",    "impersonal", "copulative",
    "aux",      "clause",    "definite",      "indefinite",
};

bool known_feature(std::string_view f) {
  for (const char* n : kFeatureNames) {
    if (f == n) return true;
  }
  return false;
}

bool has_feature(const Token& t, std::string_view f) {
  if (f == "personal") return t.pron_subtype == PronSubtype::Personal;
  if (f == "reflexive") return t.pron_subtype == PronSubtype::Reflexive;
  if (f == "demonstrative") return t.pron_subtype == PronSubtype::Demonstrative;
  if (f == "relative") return t.pron_subtype == PronSubtype::Relative;
  if (f == "possessive") return t.pron_subtype == PronSubtype::Possessive;
  if (f == "clitic") return t.clitic;
  if (f == "finite") return t.verb_flags.finite();
  if (f == "imperative") return t.verb_flags.imperative();
  if (f == "impersonal") return t.verb_flags.impersonal();
  if (f == "copulative") return t.verb_flags.copulative();
  if (f == "aux") return t.verb_flags.aux();
  if (f == "clause") return is_clause_verb(t);
  if (f == "definite") return t.definiteness == Definiteness::Definite;
  if (f == "indefinite") return t.definiteness == Definiteness::Indefinite;
  return false;
}

bool in_list(const std::vector<std::string>& list, const std::string& folded) {
  return std::find(list.begin(), list.end(), folded) != list.end();
}

}  // namespace

bool TokenTest::matches(const Token& t) const {
  if (pos && t.pos != *pos) return false;
  for (const auto& f : required) {
    if (!has_feature(t, f)) return false;
  }
  for (const auto& f : forbidden) {
    if (has_feature(t, f)) return false;
  }
  if (!lemmas.empty() || !excluded_lemmas.empty()) {
    std::string lemma = text::fold_case(t.lemma);
    if (!lemmas.empty() && !in_list(lemmas, lemma)) return false;
    if (in_list(excluded_lemmas, lemma)) return false;
  }
  return true;
}

bool TokenClass::matches(const Token& t) const {
  for (const auto& alt : alternatives) {
    if (alt.matches(t)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Grammar parsing.

class GrammarParser {
 public:
  GrammarParser(const std::string& source) : source_(source) {}

  Grammar parse(std::istream& in) {
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
      ++ln;
      auto t = text::trim(line);
      if (t.empty() || t.front() == '#') continue;
      if (text::starts_with(t, "class ")) {
        parse_class(t.substr(6), ln);
      } else if (text::starts_with(t, "set ")) {
        parse_setting(t.substr(4), ln);
      } else {
        parse_rule(t, ln);
      }
    }
    check_references();
    return std::move(g_);
  }

 private:
  [[noreturn]] void fail(int ln, const std::string& msg) {
    throw ParseError(source_, ln, msg);
  }

  std::vector<std::string> lemma_list(std::string_view body) {
    std::vector<std::string> out;
    for (auto w : text::split_ws(body)) out.push_back(text::fold_case(w));
    return out;
  }

  TokenTest parse_test(std::string_view s, int ln) {
    TokenTest test;
    std::size_t i = 0;
    while (i < s.size() && s[i] != '.' && s[i] != '!' && s[i] != '[' &&
           s[i] != '~') {
      ++i;
    }
    std::string_view cat = s.substr(0, i);
    if (cat.empty()) fail(ln, "missing category in class alternative");
    if (cat != "*") {
      try {
        test.pos = pos_from_string(cat);
      } catch (const Error& e) {
        fail(ln, e.what());
      }
    }
    while (i < s.size()) {
      char c = s[i];
      if (c == '.' || c == '!') {
        std::size_t j = i + 1;
        while (j < s.size() && s[j] != '.' && s[j] != '!' && s[j] != '[' &&
               s[j] != '~') {
          ++j;
        }
        std::string f(s.substr(i + 1, j - i - 1));
        if (!known_feature(f)) fail(ln, "unknown feature '" + f + "'");
        (c == '.' ? test.required : test.forbidden).push_back(f);
        i = j;
      } else if (c == '[' || (c == '~' && i + 1 < s.size() && s[i + 1] == '[')) {
        std::size_t open = c == '[' ? i : i + 1;
        std::size_t close = s.find(']', open);
        if (close == std::string_view::npos) fail(ln, "unterminated lemma list");
        auto list = lemma_list(s.substr(open + 1, close - open - 1));
        if (list.empty()) fail(ln, "empty lemma list");
        auto& dest = c == '[' ? test.lemmas : test.excluded_lemmas;
        dest.insert(dest.end(), list.begin(), list.end());
        i = close + 1;
      } else {
        fail(ln, "unexpected character in class alternative");
      }
    }
    return test;
  }

  // Splits on '|' outside brackets.
  std::vector<std::string_view> alternatives(std::string_view body) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '[') ++depth;
      if (body[i] == ']') --depth;
      if (body[i] == '|' && depth == 0) {
        out.push_back(text::trim(body.substr(start, i - start)));
        start = i + 1;
      }
    }
    out.push_back(text::trim(body.substr(start)));
    return out;
  }

  void parse_class(std::string_view body, int ln) {
    auto eq = body.find('=');
    if (eq == std::string_view::npos) fail(ln, "class without '='");
    TokenClass cls;
    cls.name = std::string(text::trim(body.substr(0, eq)));
    if (cls.name.empty()) fail(ln, "class without a name");
    if (cls.name == "NP" || cls.name == "PP" || cls.name == "VG") {
      fail(ln, "class name collides with a constituent");
    }
    if (g_.find_class(cls.name)) fail(ln, "class '" + cls.name + "' redefined");
    for (auto alt : alternatives(body.substr(eq + 1))) {
      if (alt.empty()) fail(ln, "empty class alternative");
      cls.alternatives.push_back(parse_test(alt, ln));
    }
    g_.classes_.push_back(std::move(cls));
  }

  void parse_setting(std::string_view body, int ln) {
    auto eq = body.find('=');
    if (eq == std::string_view::npos) fail(ln, "setting without '='");
    auto key = text::trim(body.substr(0, eq));
    auto value = text::trim(body.substr(eq + 1));
    if (key != "lookahead") fail(ln, "unknown setting '" + std::string(key) + "'");
    int v = text::parse_index(value);
    if (v <= 0) fail(ln, "lookahead must be a positive integer");
    g_.lookahead_ = v;
  }

  void parse_rule(std::string_view t, int ln) {
    auto colon = t.find(':');
    if (colon == std::string_view::npos) fail(ln, "expected 'class', 'set' or a rule");
    auto name = text::trim(t.substr(0, colon));
    ChunkRule rule;
    rule.line = ln;
    if (name == "NP") {
      rule.kind = NodeKind::NP;
    } else if (name == "PP") {
      rule.kind = NodeKind::PP;
    } else if (name == "VG") {
      rule.kind = NodeKind::VG;
    } else {
      fail(ln, "rules must build NP, PP or VG, not '" + std::string(name) + "'");
    }
    int heads = 0;
    for (auto w : text::split_ws(t.substr(colon + 1))) {
      PatternElement el;
      std::size_t end = w.size();
      while (end > 0 && (w[end - 1] == '?' || w[end - 1] == '*' ||
                         w[end - 1] == '+' || w[end - 1] == '@')) {
        char c = w[end - 1];
        if (c == '@') {
          if (el.head) fail(ln, "duplicate '@'");
          el.head = true;
        } else {
          if (el.quantifier) fail(ln, "more than one quantifier");
          el.quantifier = c;
        }
        --end;
      }
      el.ref = std::string(w.substr(0, end));
      if (el.ref.empty()) fail(ln, "empty pattern element");
      heads += el.head;
      rule.elements.push_back(std::move(el));
    }
    if (rule.elements.empty()) fail(ln, "empty rule");
    if (heads > 1) fail(ln, "rule marks more than one head");
    g_.rules_.push_back(std::move(rule));
  }

  void check_references() {
    for (const auto& r : g_.rules_) {
      for (const auto& el : r.elements) {
        bool constituent = el.ref == "NP" || el.ref == "PP" || el.ref == "VG";
        if (!constituent && !g_.find_class(el.ref)) {
          fail(r.line, "undefined class '" + el.ref + "'");
        }
      }
      if (r.elements.front().ref == to_string(r.kind)) {
        fail(r.line, "left-recursive rule");
      }
    }
  }

  std::string source_;
  Grammar g_;
};

Grammar Grammar::parse(std::istream& in, const std::string& source) {
  return GrammarParser(source).parse(in);
}

Grammar Grammar::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open grammar " + path);
  return parse(in, path);
}

const TokenClass* Grammar::find_class(std::string_view name) const {
  for (const auto& c : classes_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Grammar::is_boundary(const Token& t) const {
  const TokenClass* c = find_class("BOUNDARY");
  return c && c->matches(t);
}

bool Grammar::is_coordinator(const Token& t) const {
  const TokenClass* c = find_class("COORDINATOR");
  return c && c->matches(t);
}

bool Grammar::opens_infinitive(const Token& t) const {
  const TokenClass* c = find_class("INFINITIVE_OPENER");
  return c && c->matches(t);
}

// ---------------------------------------------------------------------------
// Chunking.

namespace {

constexpr int kMaxDepth = 8;

struct Partial {
  int end = 0;
  std::vector<SlotStructure> nodes;
  int head = -1;
};

struct Option {
  int end = 0;
  SlotStructure node;
  int rule = 0;
};

SlotStructure leaf(const Token& t) {
  SlotStructure n;
  n.kind = NodeKind::TOKEN_LEAF;
  n.person = t.person;
  n.gender = t.gender;
  n.number = t.number;
  n.sem_category = t.sem_category;
  n.definiteness = t.definiteness;
  n.head = t.index;
  n.span = {t.index, t.index + 1};
  return n;
}

class Matcher {
 public:
  Matcher(const std::vector<Token>& tokens, const Grammar& g)
      : tokens_(tokens), g_(g) {}

  // Every way to build constituent `kind` at `pos`, one per end position
  // (the first found wins), ordered by rule then by search order.
  std::vector<Option> constituents(NodeKind kind, int pos, int depth) {
    std::vector<Option> out;
    if (depth > kMaxDepth) return out;
    const auto& rules = g_.rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (rules[r].kind != kind) continue;
      std::vector<Partial> partials;
      Partial cur;
      cur.end = pos;
      match(rules[r], 0, pos, 0, cur, partials, depth);
      for (auto& p : partials) {
        if (p.end <= pos) continue;
        bool dup = std::any_of(out.begin(), out.end(),
                               [&](const Option& o) { return o.end == p.end; });
        if (dup) continue;
        out.push_back({p.end, build(kind, pos, p), static_cast<int>(r)});
      }
    }
    return out;
  }

  std::vector<Option> any_constituent(int pos) {
    std::vector<Option> out;
    for (NodeKind k : {NodeKind::NP, NodeKind::PP, NodeKind::VG}) {
      for (auto& o : constituents(k, pos, 0)) out.push_back(std::move(o));
    }
    return out;
  }

 private:
  void match(const ChunkRule& rule, std::size_t ei, int pos, int reps,
             Partial& cur, std::vector<Partial>& out, int depth) {
    if (ei == rule.elements.size()) {
      Partial done = cur;
      done.end = pos;
      out.push_back(std::move(done));
      return;
    }
    const PatternElement& el = rule.elements[ei];
    bool many = el.quantifier == '*' || el.quantifier == '+';
    int min = (el.quantifier == 0 || el.quantifier == '+') ? 1 : 0;
    int max = many ? 1 << 20 : 1;

    if (reps < max) {
      for (auto& occ : occurrences(el, pos, depth)) {
        std::size_t mark = cur.nodes.size();
        int saved_head = cur.head;
        cur.nodes.push_back(std::move(occ.node));
        if (el.head) cur.head = cur.nodes.back().head;
        match(rule, ei, occ.end, reps + 1, cur, out, depth);
        cur.nodes.resize(mark);
        cur.head = saved_head;
      }
    }
    if (reps >= min) match(rule, ei + 1, pos, 0, cur, out, depth);
  }

  std::vector<Option> occurrences(const PatternElement& el, int pos, int depth) {
    if (el.ref == "NP") return constituents(NodeKind::NP, pos, depth + 1);
    if (el.ref == "PP") return constituents(NodeKind::PP, pos, depth + 1);
    if (el.ref == "VG") return constituents(NodeKind::VG, pos, depth + 1);
    std::vector<Option> out;
    if (pos >= static_cast<int>(tokens_.size())) return out;
    const TokenClass* cls = g_.find_class(el.ref);
    if (cls && cls->matches(tokens_[pos])) {
      out.push_back({pos + 1, leaf(tokens_[pos]), 0});
    }
    return out;
  }

  SlotStructure build(NodeKind kind, int begin, Partial& p) {
    SlotStructure n;
    n.kind = kind;
    n.span = {begin, p.end};
    n.head = p.head >= 0 ? p.head : p.end - 1;
    n.children = std::move(p.nodes);
    const Token& h = tokens_[n.head];
    switch (kind) {
      case NodeKind::NP:
        n.person = h.person;
        n.gender = h.gender;
        n.number = h.number;
        n.sem_category = h.sem_category;
        for (const auto& c : n.children) {
          if (c.kind == NodeKind::TOKEN_LEAF &&
              tokens_[c.head].pos == Pos::Det) {
            n.definiteness = tokens_[c.head].definiteness;
            break;
          }
        }
        break;
      case NodeKind::PP:
        for (const auto& c : n.children) {
          if (c.kind == NodeKind::NP && c.head == n.head) {
            n.person = c.person;
            n.gender = c.gender;
            n.number = c.number;
            n.sem_category = c.sem_category;
            n.definiteness = c.definiteness;
          }
        }
        break;
      case NodeKind::VG:
        for (int i = begin; i < p.end; ++i) {
          if (is_clause_verb(tokens_[i])) {
            n.person = tokens_[i].person;
            n.number = tokens_[i].number;
            break;
          }
        }
        if (n.person == kUnknownPerson) {
          n.person = h.person;
          n.number = h.number;
        }
        n.gender = h.gender;
        break;
      default:
        break;
    }
    return n;
  }

  const std::vector<Token>& tokens_;
  const Grammar& g_;
};

// A coordinator opens a new clause when a clause verb precedes it since the
// last boundary and another follows within the lookahead window.
bool coordinator_splits(const std::vector<Token>& toks, int c,
                        const Grammar& g) {
  bool verb_before = false;
  for (int i = c - 1; i >= 0; --i) {
    if (g.is_boundary(toks[i])) break;
    if (is_clause_verb(toks[i])) {
      verb_before = true;
      break;
    }
  }
  if (!verb_before) return false;
  int last = std::min<int>(toks.size() - 1, c + g.lookahead());
  for (int i = c + 1; i <= last; ++i) {
    if (is_clause_verb(toks[i])) return true;
  }
  return false;
}

Person min_person(Person a, Person b) {
  if (a == kUnknownPerson) return b;
  if (b == kUnknownPerson) return a;
  return std::min(a, b);
}

SlotStructure coordinate(SlotStructure left, SlotStructure conj,
                         SlotStructure right) {
  SlotStructure n;
  n.kind = NodeKind::NP;
  n.coordinated = true;
  n.span = {left.span.begin, right.span.end};
  n.head = left.head;
  n.number = Number::Pl;
  n.person = min_person(left.person, right.person);
  if (left.gender == Gender::Masc || right.gender == Gender::Masc) {
    n.gender = Gender::Masc;
  } else if (left.gender == Gender::Fem && right.gender == Gender::Fem) {
    n.gender = Gender::Fem;
  }
  n.sem_category =
      left.sem_category == right.sem_category ? left.sem_category
                                              : SemCategory::Unknown;
  n.definiteness = left.definiteness;
  n.children.push_back(std::move(left));
  n.children.push_back(std::move(conj));
  n.children.push_back(std::move(right));
  return n;
}

void assign_markers(SlotStructure& n, MarkerCounter& markers) {
  if (n.kind == NodeKind::NP) n.discourse_marker = markers.next();
  for (auto& c : n.children) assign_markers(c, markers);
}

}  // namespace

SlotStructure chunk_sentence(const Sentence& sentence, const Grammar& grammar,
                             MarkerCounter* markers) {
  const auto& toks = sentence.tokens;
  const int n = static_cast<int>(toks.size());
  SlotStructure sent;
  sent.kind = NodeKind::SENT;
  sent.span = {0, n};

  Matcher m(toks, grammar);
  int pos = 0;
  while (pos < n) {
    auto options = m.any_constituent(pos);
    const Option* best = nullptr;
    for (const auto& o : options) {
      if (!best || o.end > best->end ||
          (o.end == best->end && o.rule < best->rule)) {
        best = &o;
      }
    }
    if (best) {
      sent.children.push_back(best->node);
      pos = best->end;
    } else {
      sent.children.push_back(leaf(toks[pos]));
      ++pos;
    }
  }

  auto& ch = sent.children;
  for (std::size_t k = 0; k + 2 < ch.size();) {
    bool mergeable = ch[k].kind == NodeKind::NP &&
                     ch[k + 1].kind == NodeKind::TOKEN_LEAF &&
                     ch[k + 2].kind == NodeKind::NP &&
                     grammar.is_coordinator(toks[ch[k + 1].head]) &&
                     !coordinator_splits(toks, ch[k + 1].head, grammar);
    if (!mergeable) {
      ++k;
      continue;
    }
    SlotStructure merged = coordinate(std::move(ch[k]), std::move(ch[k + 1]),
                                      std::move(ch[k + 2]));
    ch.erase(ch.begin() + k + 1, ch.begin() + k + 3);
    ch[k] = std::move(merged);
  }

  MarkerCounter local;
  assign_markers(sent, markers ? *markers : local);
  return sent;
}

std::vector<Clause> split_clauses(const SlotStructure& sent_ss,
                                  const Sentence& sentence,
                                  const Grammar& grammar) {
  const auto& ch = sent_ss.children;
  const auto& toks = sentence.tokens;
  std::vector<Clause> clauses;
  if (ch.empty()) {
    Clause c;
    c.sentence = sentence.id;
    clauses.push_back(c);
    return clauses;
  }

  auto vg_verb = [&](const SlotStructure& node) -> std::optional<int> {
    if (node.kind != NodeKind::VG) return std::nullopt;
    for (int i = node.span.begin; i < node.span.end; ++i) {
      if (is_clause_verb(toks[i])) return i;
    }
    return std::nullopt;
  };

  // A verb group right after an opener preposition heads its own clause.
  auto infinitive = [&](int k) {
    if (k == 0 || ch[k].kind != NodeKind::VG || vg_verb(ch[k])) return false;
    const auto& prev = ch[k - 1];
    return prev.kind == NodeKind::TOKEN_LEAF && grammar.opens_infinitive(toks[prev.head]);
  };

  // Segments between boundary children.
  std::vector<std::pair<int, int>> segments;
  int start = 0;
  for (int k = 1; k < static_cast<int>(ch.size()); ++k) {
    if (ch[k].kind != NodeKind::TOKEN_LEAF) continue;
    const Token& t = toks[ch[k].head];
    bool boundary = grammar.is_boundary(t) ||
                    (grammar.is_coordinator(t) &&
                     coordinator_splits(toks, t.index, grammar));
    if (boundary) {
      segments.emplace_back(start, k);
      start = k;
    }
  }
  segments.emplace_back(start, static_cast<int>(ch.size()));

  // Each segment is split into one group per finite VG, assigning the
  // constituents between two verbs to the nearer one (ties go to the later).
  struct Group {
    int begin, end, vg;
  };
  std::vector<Group> groups;
  std::vector<std::pair<int, int>> verbless;
  for (auto [b, e] : segments) {
    std::vector<int> vgs;
    for (int k = b; k < e; ++k) {
      if (vg_verb(ch[k]) || infinitive(k)) vgs.push_back(k);
    }
    if (vgs.empty()) {
      verbless.emplace_back(b, e);
      groups.push_back({b, e, -1});
      continue;
    }
    int cur = b;
    for (std::size_t v = 0; v < vgs.size(); ++v) {
      int end = e;
      if (v + 1 < vgs.size()) {
        int gap_first = vgs[v] + 1, gap_last = vgs[v + 1] - 1;
        // Constituent k goes to vgs[v] iff k - vgs[v] < vgs[v+1] - k.
        end = gap_first;
        for (int k = gap_first; k <= gap_last; ++k) {
          if (k - vgs[v] < vgs[v + 1] - k) end = k + 1;
        }
      }
      groups.push_back({cur, end, vgs[v]});
      cur = end;
    }
  }

  // Verbless groups join the preceding clause, or the following one when
  // they open the sentence.
  std::vector<Group> merged;
  bool any_verb = std::any_of(groups.begin(), groups.end(),
                              [](const Group& g) { return g.vg >= 0; });
  if (!any_verb) {
    merged.push_back({0, static_cast<int>(ch.size()), -1});
  } else {
    int pending_begin = -1;
    for (const auto& g : groups) {
      if (g.vg < 0) {
        if (!merged.empty()) {
          merged.back().end = g.end;
        } else if (pending_begin < 0) {
          pending_begin = g.begin;
        }
        continue;
      }
      Group cur = g;
      if (pending_begin >= 0) {
        cur.begin = pending_begin;
        pending_begin = -1;
      }
      merged.push_back(cur);
    }
  }

  for (const auto& g : merged) {
    Clause c;
    c.sentence = sentence.id;
    c.index = static_cast<int>(clauses.size());
    c.span = {ch[g.begin].span.begin, ch[g.end - 1].span.end};
    c.vg = g.vg;
    if (g.vg >= 0) c.verb = vg_verb(ch[g.vg]);
    for (int k = g.begin; k < g.end; ++k) {
      if (k == g.vg) continue;
      (g.vg >= 0 && k > g.vg ? c.post : c.pre).push_back(k);
    }
    clauses.push_back(std::move(c));
  }
  return clauses;
}

std::vector<ChunkedSentence> chunk_document(const Document& doc,
                                            const Grammar& grammar) {
  std::vector<ChunkedSentence> out;
  MarkerCounter markers;
  for (const auto& s : doc.sentences) {
    ChunkedSentence cs;
    cs.tree = chunk_sentence(s, grammar, &markers);
    cs.clauses = split_clauses(cs.tree, s, grammar);
    out.push_back(std::move(cs));
  }
  return out;
}

const Clause* clause_of(const std::vector<Clause>& clauses, int token) {
  for (const auto& c : clauses) {
    if (c.span.contains(token)) return &c;
  }
  return nullptr;
}

}  // namespace anaforo
