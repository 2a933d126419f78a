#include <algorithm>
#include <random>
#include <sstream>

#include "anaforo/error.hpp"
#include "anaforo/eval.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace anaforo;

namespace {

const std::string kMary = testing::tagged(
    {"Mary/Mary/NNP-F went/go/VBD to/TO the/DT cinema/NN ./.",
     "She/she/PRP-3-F-SG did/do/VBD n't/not/RB like/VB the/DT film/NN ./."});

Metric metric(long correct, long attempted, long total = 0) {
  Metric m;
  m.correct = correct;
  m.attempted = attempted;
  m.total_real = total;
  return m;
}

GoldAnnotations gold_of(const std::string& text, const Document& doc) {
  std::istringstream in(text);
  return load_gold(in, doc);
}

Locator loc(const std::string& s) { return *parse_locator(s); }

ResolvedItem item(const std::string& anaphor, std::optional<std::string> ante, int head) {
  ResolvedItem i;
  i.anaphor = loc(anaphor);
  if (ante) i.antecedent = loc(*ante);
  i.head = head;
  return i;
}

ResolutionScore score_of(const std::vector<bool>& correct) {
  ResolutionScore s;
  for (std::size_t i = 0; i < correct.size(); ++i) {
    Outcome o{Locator{static_cast<int>(i), false, 0, 1}, true, correct[i]};
    s.outcomes.push_back(o);
    s.overall += metric(correct[i] ? 1 : 0, 1, 1);
  }
  return s;
}

}  // namespace

TEST_SUITE("eval") {

TEST_CASE("published percentages") {
  CHECK(metric(485, 596).precision_pct() == "81.4");
  CHECK(metric(2825, 3126).precision_pct() == "90.4");
  CHECK(metric(657, 775).precision_pct() == "84.8");
  CHECK(metric(1, 3).precision_pct() == "33.3");
  CHECK(metric(2, 3).precision_pct() == "66.7");
  CHECK(metric(3, 3).precision_pct() == "100.0");
}

TEST_CASE("nothing attempted is NONE, not zero") {
  auto m = metric(0, 0, 5);
  CHECK(!m.precision());
  CHECK(m.precision_pct() == "NONE");
  CHECK(m.recall_pct() == "0.0");
  CHECK(metric(0, 0, 0).recall_pct() == "NONE");
  CHECK(score_translations({}, GoldAnnotations{}).precision_pct() == "NONE");
}

TEST_CASE("precision times attempted is the correct count") {
  std::mt19937 rng(5);
  for (int i = 0; i < 5000; ++i) {
    long attempted = 1 + rng() % 4000;
    long correct = rng() % (attempted + 1);
    auto m = metric(correct, attempted);
    CHECK(std::llround(*m.precision() * attempted) == correct);
    double shown = std::stod(m.precision_pct());
    CHECK(std::abs(shown - 100.0 * correct / attempted) <= 0.05 + 1e-9);
  }
}

TEST_CASE("hand-scored resolution") {
  auto a = testing::analyze(kMary, Lang::EN);
  auto gold = gold_of("s1.t0 -> s0.t0 :: ella :: chain 1\n", a.doc);
  auto right = score_resolutions({item("s1.t0", "s0.t0", 0)}, gold, a.doc);
  CHECK(right.overall == metric(1, 1, 1));
  CHECK(right.by_kind.at("personal") == metric(1, 1, 1));
  CHECK(right.by_function.at("subject") == metric(1, 1, 1));
  REQUIRE(right.outcomes.size() == 1);
  CHECK(right.outcomes[0].correct);

  auto wrong = score_resolutions({item("s0.t0", std::nullopt, -1), item("s1.t0", "s0.t3..t4", 4)},
                                 gold, a.doc);
  CHECK(wrong.overall == metric(0, 1, 1));
  auto none = score_resolutions({item("s1.t0", std::nullopt, -1)}, gold, a.doc);
  CHECK(none.overall == metric(0, 0, 1));
  CHECK(none.overall.precision_pct() == "NONE");
  // Undetected gold anaphors still count as real.
  CHECK(score_resolutions({}, gold, a.doc).overall == metric(0, 0, 1));
}

TEST_CASE("a chain mention anywhere counts as the antecedent") {
  auto a = testing::analyze(kMary, Lang::EN);
  auto gold = gold_of("s1.t0 -> s0.t0 :: ella :: chain 1\nmention s0.t3..t4 :: chain 1\n", a.doc);
  CHECK(score_resolutions({item("s1.t0", "s0.t3..t4", 4)}, gold, a.doc).overall ==
        metric(1, 1, 1));
}

TEST_CASE("exophoric gold is not scored") {
  auto a = testing::analyze(kMary, Lang::EN);
  auto gold = gold_of("s1.t0 -> exophoric :: - :: chain 1\n", a.doc);
  auto s = score_resolutions({item("s1.t0", "s0.t0", 0)}, gold, a.doc);
  CHECK(s.overall == metric(0, 0, 0));
}

TEST_CASE("a gold pronoun that is not a pronoun in the document is a data error") {
  auto a = testing::analyze(kMary, Lang::EN);
  auto gold = gold_of("s0.t1 -> s0.t0 :: - :: chain 1\n", a.doc);
  CHECK_THROWS_WITH_AS(score_resolutions({}, gold, a.doc), doctest::Contains("s0.t1"), DataError);
}

TEST_CASE("translation scoring folds case") {
  auto a = testing::analyze(kMary, Lang::EN);
  auto gold = gold_of("s1.t0 -> s0.t0 :: ella :: chain 1\n", a.doc);
  CHECK(score_translations({{loc("s1.t0"), "Ella"}}, gold) == metric(1, 1, 1));
  CHECK(score_translations({{loc("s1.t0"), "él"}}, gold) == metric(0, 1, 1));
  CHECK(score_translations({}, gold) == metric(0, 0, 1));
}

TEST_CASE("detection tally matches a hand count on the corpus") {
  Metric total;
  for (const auto& d : testing::corpus()) {
    auto s = score_detection(d.analysis.zero.verbs, d.gold);
    long attempted = 0, correct = 0;
    for (const auto& g : d.gold.verbs) {
      for (const auto& v : d.analysis.zero.verbs) {
        if (v.sentence == g.sentence && v.verb == g.token) {
          ++attempted;
          if (v.status == g.status) ++correct;
        }
      }
    }
    CHECK(s.overall == metric(correct, attempted, static_cast<long>(d.gold.verbs.size())));
    Metric cells;
    for (const auto& [k, m] : s.cells) cells += m;
    CHECK(cells == s.overall);
    total += s.overall;
  }
  CHECK(total.attempted > 0);
}

TEST_CASE("boxer detection: both verbs right") {
  const auto& docs = testing::corpus();
  auto it = std::find_if(docs.begin(), docs.end(), [](const testing::CorpusDoc& d) {
    return d.stem.find("es_boxeador") != std::string::npos;
  });
  REQUIRE(it != docs.end());
  auto s = score_detection(it->analysis.zero.verbs, it->gold);
  CHECK(s.overall == metric(2, 2, 2));
  CHECK(s.cells.at("3 omitted") == metric(1, 1, 1));
  CHECK(s.cells.at("3 present") == metric(1, 1, 1));
}

TEST_CASE("kappa") {
  CHECK(kappa({{"x", "x", "y", "y"}, {"x", "y", "y", "y"}}) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(kappa({{"x", "y", "z"}, {"x", "y", "z"}}) == 1.0);
  CHECK(kappa({{"x", "x"}, {"x", "x"}}) == 1.0);
  CHECK_THROWS_AS(kappa({{}, {}}), Error);
  CHECK_THROWS_AS(kappa({{"x"}, {"x", "y"}}), Error);

  std::mt19937 rng(9);
  for (int i = 0; i < 2000; ++i) {
    KappaInput in;
    int n = 1 + rng() % 30;
    int labels = 1 + rng() % 4;
    for (int k = 0; k < n; ++k) {
      in.a.push_back("l" + std::to_string(rng() % labels));
      in.b.push_back(rng() % 3 ? in.a.back() : "l" + std::to_string(rng() % labels));
    }
    double k = kappa(in);
    CHECK(k >= -1.0 - 1e-12);
    CHECK(k <= 1.0 + 1e-12);
    // Renaming labels consistently changes nothing.
    KappaInput renamed;
    for (const auto& s : in.a) renamed.a.push_back("r" + s + "!");
    for (const auto& s : in.b) renamed.b.push_back("r" + s + "!");
    CHECK(kappa(renamed) == doctest::Approx(k).epsilon(1e-12));
    // So does swapping annotators.
    CHECK(kappa({in.b, in.a}) == doctest::Approx(k).epsilon(1e-12));
  }
}

TEST_CASE("kappa items pair the pronouns both annotators marked") {
  auto a = testing::analyze(kMary, Lang::EN);
  auto ga = gold_of("s1.t0 -> s0.t0 :: ella :: chain 1\n", a.doc);
  auto gb = gold_of("s1.t0 -> exophoric :: - :: chain 1\n", a.doc);
  auto items = kappa_items(ga, gb);
  CHECK(items.a == std::vector<std::string>{"s0.t0"});
  CHECK(items.b == std::vector<std::string>{"exophoric"});
  CHECK(kappa_items(ga, GoldAnnotations{}).a.empty());
}

TEST_CASE("comparison rows are the independent scores and do not depend on order") {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    int algos = 1 + rng() % 5;
    int docs = 1 + rng() % 4;
    std::vector<ComparisonInput> runs;
    std::vector<std::vector<std::vector<bool>>> truth(algos);
    for (int i = 0; i < algos; ++i) {
      ComparisonInput in{"algo" + std::to_string(i), {}};
      std::mt19937 layout(round);
      for (int d = 0; d < docs; ++d) {
        std::vector<bool> c(1 + layout() % 6);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = rng() % 2;
        truth[i].push_back(c);
        in.documents.push_back(score_of(c));
      }
      runs.push_back(std::move(in));
    }
    auto rows = compare(runs);
    REQUIRE(rows.size() == runs.size());
    for (int i = 0; i < algos; ++i) {
      CHECK(rows[i].algorithm == runs[i].algorithm);
      ResolutionScore alone;
      for (const auto& d : runs[i].documents) alone += d;
      CHECK(rows[i].score.overall == alone.overall);
      // Wins and losses by a direct count.
      long wins = 0, losses = 0;
      for (int j = 0; j < algos; ++j) {
        if (j == i) continue;
        for (int d = 0; d < docs; ++d) {
          for (std::size_t k = 0; k < truth[i][d].size(); ++k) {
            wins += truth[i][d][k] && !truth[j][d][k];
            losses += !truth[i][d][k] && truth[j][d][k];
          }
        }
      }
      CHECK(rows[i].wins == wins);
      CHECK(rows[i].losses == losses);
    }
    auto shuffled = runs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const auto& row : compare(shuffled)) {
      auto same = std::find_if(rows.begin(), rows.end(),
                               [&](const AlgorithmRow& r) { return r.algorithm == row.algorithm; });
      REQUIRE(same != rows.end());
      CHECK(same->score.overall == row.score.overall);
      CHECK(same->wins == row.wins);
      CHECK(same->losses == row.losses);
    }
  }
}

TEST_CASE("a single algorithm has no wins or losses") {
  auto rows = compare({{"agir", {score_of({true, false, true})}}});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].wins == 0);
  CHECK(rows[0].losses == 0);
  CHECK(rows[0].score.overall == metric(2, 3, 3));
}

TEST_CASE("runs over different anaphors cannot be compared") {
  CHECK_THROWS_AS(compare({{"a", {score_of({true})}}, {"b", {score_of({true, false})}}}), DataError);
}

}  // TEST_SUITE
