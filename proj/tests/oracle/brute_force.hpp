#ifndef ANAFORO_TESTS_BRUTE_FORCE_HPP_
#define ANAFORO_TESTS_BRUTE_FORCE_HPP_

// Reference resolver written straight from the rules, sharing nothing with
// the library beyond the analysis it reads: its own NP walk, feature
// computation, agreement predicates, chain bookkeeping and preference filter.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "anaforo/resolver.hpp"
#include "anaforo/text.hpp"

namespace oracle {

using namespace anaforo;

struct Np {
  const SlotStructure* node;
  int sentence;
  bool in_pp;
  bool top_level;
  int top_index;
};

inline void walk(const SlotStructure& n, int s, bool in_pp, bool top, int top_index,
                 std::vector<Np>& out) {
  if (n.kind == NodeKind::NP) out.push_back({&n, s, in_pp, top, top_index});
  for (std::size_t k = 0; k < n.children.size(); ++k) {
    bool child_top = n.kind == NodeKind::SENT;
    int idx = child_top ? static_cast<int>(k) : top_index;
    walk(n.children[k], s, in_pp || n.kind == NodeKind::PP, child_top, idx, out);
  }
}

inline bool agree(int a, int b, int unknown) { return a == unknown || b == unknown || a == b; }

struct Cand {
  int marker, sentence, head, clause, distance, repetition;
  Span span;
  Person person;
  Gender gender;
  Number number;
  SemCategory sem;
  GramFunction function;
  bool in_pp, top_level, proper, indefinite, precedes_verb, same_function;
  bool solved_zero = false, clause_mate = false;
  bool coordinated;
  std::string lemma;
};

inline bool nearer(const Cand& x, const Cand& y) {
  return std::make_tuple(x.distance, -x.head, x.marker) <
         std::make_tuple(y.distance, -y.head, y.marker);
}

class BruteForce {
 public:
  BruteForce(const Analysis& a, const ResolverConfig& config) : a_(a), config_(config) {}

  // One audit line per anaphor.
  std::vector<std::string> run() {
    std::vector<std::string> out;
    for (const auto& an : a_.anaphors) out.push_back(resolve(an));
    return out;
  }

 private:
  int clause_of_token(int s, int token) const {
    const Clause* best = nullptr;
    for (const auto& c : a_.chunked[s].clauses) {
      if (c.span.contains(token) && (!best || best->span.contains(c.span))) best = &c;
    }
    return best ? best->index : 0;
  }

  int chain_of(int marker) const {
    for (const auto& set : chains_) {
      if (set.count(marker)) return *set.begin();
    }
    return marker;
  }

  void join(int x, int y) {
    std::set<int> merged{x, y};
    std::vector<std::set<int>> rest;
    for (auto& set : chains_) {
      if (set.count(x) || set.count(y)) {
        merged.insert(set.begin(), set.end());
      } else {
        rest.push_back(set);
      }
    }
    rest.push_back(merged);
    chains_ = std::move(rest);
  }

  int relative_target(int s, int clause) const {
    const Clause& cl = a_.chunked[s].clauses[clause];
    const auto& kids = a_.chunked[s].tree.children;
    int first = -1;
    for (int k : cl.pre) first = first < 0 ? k : std::min(first, k);
    if (cl.vg >= 0) first = first < 0 ? cl.vg : std::min(first, cl.vg);
    if (first < 0) return kNoMarker;
    const auto& node = kids[first];
    const auto& toks = a_.doc.sentences[s].tokens;
    if (node.kind != NodeKind::TOKEN_LEAF || toks[node.head].pos != Pos::Pron ||
        toks[node.head].pron_subtype != PronSubtype::Relative) {
      return kNoMarker;
    }
    for (int k = first - 1; k >= 0; --k) {
      const auto& p = kids[k];
      if (p.kind == NodeKind::TOKEN_LEAF && toks[p.head].pos == Pos::Punct) continue;
      if (p.kind == NodeKind::NP) return p.discourse_marker;
      if (p.kind == NodeKind::PP) {
        for (const auto& c : p.children) {
          if (c.kind == NodeKind::NP) return c.discourse_marker;
        }
      }
      return kNoMarker;
    }
    return kNoMarker;
  }

  std::vector<Cand> candidates(const Anaphor& an) const {
    std::vector<Np> nps;
    for (int s = 0; s <= an.sentence; ++s) walk(a_.chunked[s].tree, s, false, false, -1, nps);
    auto before = [&](const Np& np) {
      return np.sentence < an.sentence || np.node->span.end <= an.position;
    };
    auto nominal = [&](const Np& np) {
      Pos p = a_.doc.sentences[np.sentence].tokens[np.node->head].pos;
      return p == Pos::Noun || p == Pos::ProperNoun;
    };
    auto lemma_of = [&](const Np& np) {
      return text::fold_case(a_.doc.sentences[np.sentence].tokens[np.node->head].lemma);
    };
    std::vector<Cand> out;
    for (const auto& np : nps) {
      if (!nominal(np) || !before(np) || an.sentence - np.sentence > config_.window) continue;
      const SlotStructure& n = *np.node;
      const Sentence& sent = a_.doc.sentences[np.sentence];
      const auto& cs = a_.chunked[np.sentence];
      Cand c{};
      c.marker = n.discourse_marker;
      c.sentence = np.sentence;
      c.head = n.head;
      c.span = n.span;
      c.clause = clause_of_token(np.sentence, n.head);
      c.distance = an.sentence - np.sentence;
      c.person = n.person;
      c.gender = n.gender;
      c.number = n.number;
      c.sem = n.sem_category;
      c.in_pp = np.in_pp;
      c.top_level = np.top_level;
      c.proper = sent.tokens[n.head].pos == Pos::ProperNoun;
      c.indefinite = n.definiteness == Definiteness::Indefinite;
      c.coordinated = n.coordinated;
      c.lemma = sent.tokens[n.head].lemma;
      const Clause& cl = cs.clauses[c.clause];
      if (np.in_pp) {
        c.function = GramFunction::Prepositional;
      } else if (clause_subject(sent, cs.tree, cl) == np.top_index) {
        c.function = GramFunction::Subject;
      } else {
        c.function = GramFunction::Complement;
      }
      c.precedes_verb = cl.vg >= 0 && n.span.end <= cs.tree.children[cl.vg].span.begin;
      c.same_function = c.function == an.function;

      int mentions = 0;
      if (n.coordinated) {
        mentions = 1;
      } else {
        for (const auto& other : nps) {
          if (!other.node->coordinated && nominal(other) && before(other) &&
              lemma_of(other) == lemma_of(np)) {
            ++mentions;
          }
        }
      }
      int chained = 0;
      for (const auto& [pa, pm] : solved_) {
        if (chain_of(pm) != chain_of(c.marker)) continue;
        ++chained;
        if (pa->sentence != an.sentence) continue;
        if (pa->kind == AnaphorKind::Zero) c.solved_zero = true;
        if (pa->clause == an.clause) c.clause_mate = true;
      }
      c.repetition = std::max(1, mentions) + chained;
      out.push_back(c);
    }
    for (auto& c : out) {
      if (c.coordinated) continue;
      for (const auto& d : out) {
        if (d.coordinated || d.sentence != an.sentence || d.clause != an.clause) continue;
        if (text::fold_case(d.lemma) != text::fold_case(c.lemma)) continue;
        c.clause_mate = true;
      }
    }
    std::sort(out.begin(), out.end(), nearer);
    return out;
  }

  bool morph_ok(const Anaphor& an, const Cand& c) const {
    if (!agree(c.person, an.person, kUnknownPerson)) return false;
    if (!agree(static_cast<int>(c.number), static_cast<int>(an.number),
               static_cast<int>(Number::Unknown))) {
      return false;
    }
    static const std::set<std::string> kNoGender{"it", "they", "them", "itself", "themselves"};
    if (an.kind == AnaphorKind::Zero && an.gender == Gender::Unknown) return true;
    if (a_.doc.lang == Lang::EN && kNoGender.count(text::fold_case(an.surface))) return true;
    return agree(static_cast<int>(c.gender), static_cast<int>(an.gender),
                 static_cast<int>(Gender::Unknown));
  }

  bool sem_ok(const Anaphor& an, const Cand& c) const {
    if (a_.doc.lang != Lang::EN || an.kind == AnaphorKind::Zero) return true;
    static const std::set<std::string> kHuman{"he", "him", "she", "her", "himself", "herself"};
    std::string s = text::fold_case(an.surface);
    if (kHuman.count(s)) return c.sem == SemCategory::Person || c.sem == SemCategory::Unknown;
    if (s == "it" || s == "itself") return c.sem != SemCategory::Person;
    return true;
  }

  bool pref(const std::string& id, const Anaphor& an, const Cand& c) const {
    if (id == "a") return c.distance == 0;
    if (id == "b") return c.repetition >= 2;
    if (id == "c") return c.precedes_verb;
    if (id == "d") return c.proper;
    if (id == "e") return !c.indefinite;
    if (id == "f") return c.same_function;
    if (id == "z1") return c.solved_zero;
    return an.kind == AnaphorKind::Zero &&
           (an.gender == Gender::Masc || an.gender == Gender::Fem) && c.gender == an.gender;
  }

  std::string resolve(const Anaphor& an) {
    std::vector<std::string> fired;
    auto all = candidates(an);
    auto note = [&](const char* name, std::size_t x, std::size_t y) {
      fired.push_back(std::string(name) + ":" + std::to_string(x) + ">" + std::to_string(y));
    };

    std::vector<Cand> m;
    for (const auto& c : all) {
      if (morph_ok(an, c)) m.push_back(c);
    }
    note("morph", all.size(), m.size());

    std::vector<Cand> syn;
    bool reflexive = an.kind == AnaphorKind::Reflexive;
    int rel = relative_target(an.sentence, an.clause);
    for (const auto& c : m) {
      bool own = c.sentence == an.sentence && c.clause == an.clause;
      bool keep;
      if (reflexive) {
        keep = own || c.clause_mate;
      } else {
        keep = !own && !c.clause_mate;
      }
      if (!reflexive && c.sentence == an.sentence && c.marker == rel) keep = false;
      if (keep) syn.push_back(c);
    }
    if (reflexive && syn.empty()) {
      for (const auto& c : m) {
        if (c.sentence == an.sentence) syn.push_back(c);
      }
    }
    note("syntax", m.size(), syn.size());

    std::vector<Cand> pass = syn;
    if (config_.semantics) {
      pass.clear();
      for (const auto& c : syn) {
        if (sem_ok(an, c)) pass.push_back(c);
      }
      note("sem", syn.size(), pass.size());
    }

    bool cataphoric = false;
    if (an.kind == AnaphorKind::Zero) {
      bool earlier = false;
      for (const auto& c : all) earlier = earlier || morph_ok(an, c);
      if (!earlier) {
        const Clause& cl = a_.chunked[an.sentence].clauses[an.clause];
        for (int k : cl.post) {
          const auto& node = a_.chunked[an.sentence].tree.children[k];
          if (node.kind == NodeKind::NP &&
              agree(node.person, an.person, kUnknownPerson) &&
              agree(static_cast<int>(node.number), static_cast<int>(an.number),
                    static_cast<int>(Number::Unknown)) &&
              agree(static_cast<int>(node.gender), static_cast<int>(an.gender),
                    static_cast<int>(Gender::Unknown))) {
            cataphoric = true;
          }
        }
      }
    }

    std::string reason;
    std::vector<int> ranked;
    if (cataphoric) {
      reason = "cataphoric";
    } else if (pass.empty()) {
      reason = "no-candidates";
    } else {
      std::sort(pass.begin(), pass.end(), nearer);
      std::vector<bool> alive(pass.size(), true);
      std::vector<std::size_t> dropped;
      for (const auto& id : config_.orders.get(a_.doc.lang, an.kind)) {
        std::size_t yes = 0, live = 0;
        for (std::size_t i = 0; i < pass.size(); ++i) {
          if (!alive[i]) continue;
          ++live;
          yes += pref(id, an, pass[i]);
        }
        if (yes == 0) {
          fired.push_back(id + ":skip");
        } else if (yes == live) {
          fired.push_back(id + ":all");
        } else {
          fired.push_back(id + ":filter-" + std::to_string(live - yes));
          for (std::size_t i = 0; i < pass.size(); ++i) {
            if (alive[i] && !pref(id, an, pass[i])) {
              alive[i] = false;
              dropped.push_back(i);
            }
          }
        }
      }
      for (std::size_t i = 0; i < pass.size(); ++i) {
        if (alive[i]) ranked.push_back(pass[i].marker);
      }
      for (auto i : dropped) ranked.push_back(pass[i].marker);
      join(an.discourse_marker, ranked.front());
      solved_.emplace_back(&an, an.discourse_marker);
    }

    std::ostringstream line;
    line << an.id() << " fired=";
    for (const auto& f : fired) line << f << ",";
    line << " ranked=";
    for (int r : ranked) line << r << ",";
    line << " chosen=" << (ranked.empty() ? std::string("-") : std::to_string(ranked.front()))
         << " reason=" << (reason.empty() ? "-" : reason)
         << " chain=" << chain_of(an.discourse_marker);
    return line.str();
  }

  const Analysis& a_;
  const ResolverConfig& config_;
  std::vector<std::set<int>> chains_;
  std::vector<std::pair<const Anaphor*, int>> solved_;
};

// Same line format for the library resolver's output.
inline std::vector<std::string> audit_lines(const Analysis& a,
                                            const std::vector<Resolution>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) {
    std::ostringstream line;
    line << a.anaphors[r.anaphor].id() << " fired=";
    for (const auto& f : r.fired) line << f << ",";
    line << " ranked=";
    for (int m : r.ranked) line << m << ",";
    line << " chosen=" << (r.chosen ? std::to_string(*r.chosen) : std::string("-"))
         << " reason=" << (r.reason.empty() ? "-" : r.reason) << " chain=" << r.chain;
    out.push_back(line.str());
  }
  return out;
}

}  // namespace oracle

#endif  // ANAFORO_TESTS_BRUTE_FORCE_HPP_
