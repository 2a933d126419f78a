#include <random>
#include <set>
#include <sstream>

#include "anaforo/chunker.hpp"
#include "anaforo/error.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace anaforo;

namespace {

const char* kMonkey =
    "The\tthe\tDT\nmonkey\tmonkey\tNN\nate\teat\tVBD\nthe\tthe\tDT\n"
    "banana\tbanana\tNN\n";

const char* kMonkeyBecause =
    "The\tthe\tDT\nmonkey\tmonkey\tNN\nate\teat\tVBD\nthe\tthe\tDT\n"
    "banana\tbanana\tNN\nbecause\tbecause\tIN\nit\tit\tPRP-3-N-SG\n"
    "was\tbe\tVBD-3-SG\nhungry\thungry\tJJ\n.\t.\t.\n";

const char* kBoxer =
    "Ese\tese\tDD-M-SG\nhombre\thombre\tNC-M-SG\nera\tser\tVS-FIN-3-SG\n"
    "un\tuno\tDI-M-SG\nboxeador\tboxeador\tNC-M-SG\n"
    "profesional\tprofesional\tAQ-SG\n.\t.\tF\n";

std::vector<NodeKind> kinds(const SlotStructure& s) {
  std::vector<NodeKind> out;
  for (const auto& c : s.children) out.push_back(c.kind);
  return out;
}

SlotStructure chunk(const char* text, Lang lang) {
  auto d = testing::doc(text, lang);
  return chunk_sentence(d.sentences.at(0), testing::grammar(lang));
}

void check_coverage(const SlotStructure& s, int n) {
  std::vector<int> seen(n, 0);
  visit_nodes(s, [&](const SlotStructure& node) {
    if (node.kind == NodeKind::TOKEN_LEAF) ++seen.at(node.head);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const auto& c = node.children[i];
      CHECK(node.span.contains(c.span));
      if (i > 0) CHECK(node.children[i - 1].span.end <= c.span.begin);
    }
  });
  for (int i = 0; i < n; ++i) CHECK(seen[i] == 1);
}

}  // namespace

TEST_SUITE("chunker") {

TEST_CASE("monkey sentence chunks into NP VG NP") {
  auto s = chunk(kMonkey, Lang::EN);
  CHECK(kinds(s) == std::vector<NodeKind>{NodeKind::NP, NodeKind::VG, NodeKind::NP});
  CHECK(s.children[0].span == Span{0, 2});
  CHECK(s.children[0].head == 1);
  CHECK(s.children[2].span == Span{3, 5});
  CHECK(s.children[0].discourse_marker == 0);
  CHECK(s.children[2].discourse_marker == 1);
}

TEST_CASE("single punctuation token is one leaf") {
  auto s = chunk(".\t.\tF\n", Lang::ES);
  CHECK(s.kind == NodeKind::SENT);
  CHECK(kinds(s) == std::vector<NodeKind>{NodeKind::TOKEN_LEAF});
}

TEST_CASE("preposition and NP form a PP") {
  auto s = chunk("con\tcon\tSP\nel\tel\tDA-M-SG\nhombre\thombre\tNC-M-SG\n",
                 Lang::ES);
  REQUIRE(kinds(s) == std::vector<NodeKind>{NodeKind::PP});
  const auto& pp = s.children[0];
  REQUIRE(pp.children.size() == 2);
  CHECK(pp.children[0].kind == NodeKind::TOKEN_LEAF);
  CHECK(pp.children[1].kind == NodeKind::NP);
  CHECK(pp.children[1].span == Span{1, 3});
  CHECK(pp.head == 2);
  CHECK(pp.gender == Gender::Masc);
}

TEST_CASE("NP morphology comes from the head noun") {
  auto s = chunk(kBoxer, Lang::ES);
  const auto& np = s.children[2];
  CHECK(np.kind == NodeKind::NP);
  CHECK(np.span == Span{3, 6});
  CHECK(np.head == 4);
  CHECK(np.gender == Gender::Masc);
  CHECK(np.number == Number::Sg);
  CHECK(np.person == 3);
  CHECK(np.definiteness == Definiteness::Indefinite);
}

TEST_CASE("boxer sentence is one clause headed by era") {
  auto d = testing::doc(kBoxer, Lang::ES);
  const auto& g = testing::grammar(Lang::ES);
  auto s = chunk_sentence(d.sentences[0], g);
  auto clauses = split_clauses(s, d.sentences[0], g);
  REQUIRE(clauses.size() == 1);
  REQUIRE(clauses[0].verb);
  CHECK(*clauses[0].verb == 2);
  CHECK(clauses[0].pre == std::vector<int>{0});
  CHECK(clauses[0].post == std::vector<int>{2, 3});
}

TEST_CASE("verbless fragment is one clause without a verb") {
  auto d = testing::doc("Ahora\tahora\tRG\nno\tno\tRN\n.\t.\tF\n", Lang::ES);
  const auto& g = testing::grammar(Lang::ES);
  auto s = chunk_sentence(d.sentences[0], g);
  auto clauses = split_clauses(s, d.sentences[0], g);
  REQUIRE(clauses.size() == 1);
  CHECK_FALSE(clauses[0].verb);
  CHECK(clauses[0].span == Span{0, 3});
}

TEST_CASE("because opens a second clause") {
  auto d = testing::doc(kMonkeyBecause, Lang::EN);
  const auto& g = testing::grammar(Lang::EN);
  auto s = chunk_sentence(d.sentences[0], g);
  auto clauses = split_clauses(s, d.sentences[0], g);
  REQUIRE(clauses.size() == 2);
  CHECK(clauses[0].span == Span{0, 5});
  CHECK(clauses[1].span == Span{5, 10});
  CHECK(*clauses[1].verb == 7);
}

TEST_CASE("al + infinitive heads a clause without a finite verb") {
  auto d = testing::doc(testing::tagged({"Al/al/SP pasar/VM de/SP la/el/DA-F-SG calle/NC-F-SG ,/F "
                                         "vio/ver/VM-3-SG-FIN la/el/DA-F-SG torre/NC-F-SG ./F"}),
                        Lang::ES);
  const auto& g = testing::grammar(Lang::ES);
  auto s = chunk_sentence(d.sentences[0], g);
  auto clauses = split_clauses(s, d.sentences[0], g);
  REQUIRE(clauses.size() == 2);
  CHECK_FALSE(clauses[0].verb);
  CHECK(clauses[0].vg == 1);
  CHECK(clauses[0].span == Span{0, 5});
  REQUIRE(clauses[1].verb);
  CHECK(*clauses[1].verb == 6);

  // Without an opener the infinitive stays inside the finite clause.
  auto e = testing::doc(testing::tagged({"Quiere/querer/VM-3-SG-FIN pasar/VM de/SP la/el/DA-F-SG "
                                         "calle/NC-F-SG ./F"}),
                        Lang::ES);
  auto t = chunk_sentence(e.sentences[0], g);
  CHECK(split_clauses(t, e.sentences[0], g).size() == 1);
}

TEST_CASE("coordinated NP subject is merged into one plural NP") {
  auto s = chunk(
      "Juan\tJuan\tNP-M-SG\ny\ty\tCC\nMaría\tMaría\tNP-F-SG\n"
      "fueron\tir\tVM-FIN-3-PL\nal\tal\tSP\ncine\tcine\tNC-M-SG\n",
      Lang::ES);
  REQUIRE(s.children.size() == 3);
  const auto& np = s.children[0];
  CHECK(np.coordinated);
  CHECK(np.number == Number::Pl);
  CHECK(np.gender == Gender::Masc);
  CHECK(np.span == Span{0, 3});
  CHECK(np.discourse_marker == 0);
  CHECK(np.children[0].discourse_marker == 1);
  CHECK(np.children[2].discourse_marker == 2);
  CHECK(s.children[2].children[1].discourse_marker == 3);
}

TEST_CASE("two feminine conjuncts stay feminine") {
  auto s = chunk(
      "la\tel\tDA-F-SG\nmesa\tmesa\tNC-F-SG\ny\ty\tCC\nla\tel\tDA-F-SG\n"
      "silla\tsilla\tNC-F-SG\n",
      Lang::ES);
  REQUIRE(s.children.size() == 1);
  CHECK(s.children[0].gender == Gender::Fem);
}

TEST_CASE("coordinator before a finite verb splits clauses") {
  auto d = testing::doc(
      "El\tel\tDA-M-SG\nmono\tmono\tNC-M-SG\ncomió\tcomer\tVM-FIN-3-SG\n"
      "el\tel\tDA-M-SG\nplátano\tplátano\tNC-M-SG\ny\ty\tCC\n"
      "se\tse\tP0-CL\nfue\tir\tVM-FIN-3-SG\n.\t.\tF\n",
      Lang::ES);
  const auto& g = testing::grammar(Lang::ES);
  auto s = chunk_sentence(d.sentences[0], g);
  auto clauses = split_clauses(s, d.sentences[0], g);
  REQUIRE(clauses.size() == 2);
  CHECK(clauses[1].span.begin == 5);
}

TEST_CASE("constituents between two verbs go to the nearer verb") {
  // NP VG NP , NP VG with no boundary: the comma is equidistant and goes
  // to the later verb.
  auto d = testing::doc(
      "Juan\tJuan\tNP-M-SG\nvio\tver\tVM-FIN-3-SG\nel\tel\tDA-M-SG\n"
      "coche\tcoche\tNC-M-SG\n,\t,\tF\nMaría\tMaría\tNP-F-SG\n"
      "llegó\tllegar\tVM-FIN-3-SG\n",
      Lang::ES);
  const auto& g = testing::grammar(Lang::ES);
  auto s = chunk_sentence(d.sentences[0], g);
  REQUIRE(s.children.size() == 6);
  auto clauses = split_clauses(s, d.sentences[0], g);
  REQUIRE(clauses.size() == 2);
  CHECK(clauses[0].post == std::vector<int>{2});
  CHECK(clauses[1].pre == std::vector<int>{3, 4});
}

TEST_CASE("markers are unique across a document") {
  auto d = testing::doc(std::string(kBoxer) + "\n" + kBoxer, Lang::ES);
  auto chunked = chunk_document(d, testing::grammar(Lang::ES));
  std::set<int> markers;
  int nps = 0;
  for (const auto& cs : chunked) {
    visit_nodes(cs.tree, [&](const SlotStructure& n) {
      if (n.kind == NodeKind::NP) {
        ++nps;
        markers.insert(n.discourse_marker);
      }
    });
  }
  CHECK(nps == 4);
  CHECK(markers.size() == 4);
  CHECK(chunk_document(d, testing::grammar(Lang::ES))[1].tree ==
        chunked[1].tree);
}

TEST_CASE("grammar errors carry line numbers") {
  std::istringstream in("class A = NOUN\nNP: A B\n");
  try {
    Grammar::parse(in, "g.cfg");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("'B'") != std::string::npos);
  }
  std::istringstream bad_feature("class A = NOUN.shiny\n");
  CHECK_THROWS_AS(Grammar::parse(bad_feature), ParseError);
  std::istringstream bad_kind("XP: A\n");
  CHECK_THROWS_AS(Grammar::parse(bad_kind), ParseError);
}

TEST_CASE("random token sequences are covered exactly once") {
  const char* tags[] = {"DA-M-SG", "NC-F-SG", "NP-M-SG", "AQ-SG",   "RG",
                        "SP",      "VM-FIN-3-SG", "VA-FIN-3-SG", "VM",
                        "PP-3-M-SG", "PP-3-CL-F-SG", "CC", "CS", "PR", "F"};
  const char* lemmas[] = {"el", "casa", "Juan", "rojo", "no", "de",
                          "comer", "haber", "comido", "él", "la", "y",
                          "que", "que", ";"};
  std::mt19937 rng(7);
  const auto& g = testing::grammar(Lang::ES);
  for (int iter = 0; iter < 500; ++iter) {
    Sentence s;
    int n = 1 + static_cast<int>(rng() % 14);
    for (int i = 0; i < n; ++i) {
      int k = static_cast<int>(rng() % 15);
      std::string line = std::string("w\t") + lemmas[k] + "\t" + tags[k] + "\n";
      auto d = testing::doc(line, Lang::ES);
      Token t = d.sentences[0].tokens[0];
      t.index = i;
      s.tokens.push_back(t);
    }
    auto tree = chunk_sentence(s, g);
    check_coverage(tree, n);
    CHECK(chunk_sentence(s, g) == tree);
    auto clauses = split_clauses(tree, s, g);
    int finite_vgs = 0;
    for (const auto& c : tree.children) {
      if (c.kind != NodeKind::VG) continue;
      for (int i = c.span.begin; i < c.span.end; ++i) {
        if (is_clause_verb(s.tokens[i])) {
          ++finite_vgs;
          break;
        }
      }
    }
    CHECK(static_cast<int>(clauses.size()) == std::max(1, finite_vgs));
    std::vector<int> owner(tree.children.size(), 0);
    for (const auto& c : clauses) {
      for (int k : c.pre) ++owner[k];
      for (int k : c.post) ++owner[k];
      if (c.vg >= 0) ++owner[c.vg];
    }
    for (int o : owner) CHECK(o == 1);
  }
}

}  // TEST_SUITE
