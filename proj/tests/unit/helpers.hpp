#ifndef ANAFORO_TESTS_HELPERS_HPP_
#define ANAFORO_TESTS_HELPERS_HPP_

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "anaforo/baselines.hpp"
#include "anaforo/chunker.hpp"
#include "anaforo/corpus.hpp"
#include "anaforo/generator.hpp"
#include "anaforo/pipeline.hpp"

namespace testing {

inline std::string data_path(const std::string& name) {
  return std::string(ANAFORO_TEST_DATA) + "/" + name;
}

inline std::string corpus_path(const std::string& name) {
  return std::string(ANAFORO_TEST_CORPUS) + "/" + name;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(ANAFORO_TEST_FIXTURES) + "/" + name;
}

inline const anaforo::Grammar& grammar(anaforo::Lang lang) {
  static const anaforo::Grammar es =
      anaforo::Grammar::load(data_path("grammar_es.cfg"));
  static const anaforo::Grammar en =
      anaforo::Grammar::load(data_path("grammar_en.cfg"));
  return lang == anaforo::Lang::ES ? es : en;
}

inline anaforo::Document doc(const std::string& text, anaforo::Lang lang) {
  return anaforo::parse_document_string(text, lang);
}

inline const anaforo::Resources& resources() {
  static const anaforo::Resources r =
      anaforo::load_resources(anaforo::ResourcePaths::in(ANAFORO_TEST_DATA));
  return r;
}

inline anaforo::Analysis analyze(const std::string& text, anaforo::Lang lang) {
  return anaforo::analyze(doc(text, lang), resources());
}

inline anaforo::BaselineConfig shipped_config() {
  anaforo::BaselineConfig c;
  c.resolver.orders = anaforo::PreferenceOrders::load(data_path("prefs.cfg"));
  c.weights = anaforo::SalienceWeights::load(data_path("salience.weights"));
  return c;
}

inline const anaforo::BilingualDictionary& dictionary() {
  static const anaforo::BilingualDictionary d = anaforo::load_dictionary_file(data_path("dict.tsv"));
  return d;
}

inline const anaforo::RuleTable& rules() {
  static const anaforo::RuleTable t = anaforo::RuleTable::load(data_path("rules.tsv"));
  return t;
}

// Corpus documents as paths without the .tag extension, sorted.
inline std::vector<std::string> corpus_stems() {
  std::vector<std::string> out;
  for (const char* lang : {"es", "en"}) {
    for (const auto& e : std::filesystem::directory_iterator(corpus_path(lang))) {
      if (e.path().extension() == ".tag") {
        auto p = e.path().string();
        out.push_back(p.substr(0, p.size() - 4));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CorpusDoc {
  std::string stem;
  anaforo::Analysis analysis;
  anaforo::GoldAnnotations gold;
};

inline const std::vector<CorpusDoc>& corpus() {
  static const std::vector<CorpusDoc> docs = [] {
    std::vector<CorpusDoc> out;
    for (const auto& stem : corpus_stems()) {
      auto d = anaforo::load_document(stem + ".tag");
      auto a = anaforo::analyze(d, resources());
      auto g = anaforo::load_gold_file(stem + ".gold", a.doc);
      out.push_back({stem, std::move(a), std::move(g)});
    }
    return out;
  }();
  return docs;
}

// Sentences written as `word/TAG` or `word/lemma/TAG`, one per line, become
// tagged text.
inline std::string tagged(const std::vector<std::string>& sentences) {
  std::ostringstream out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i) out << "\n";
    std::istringstream words(sentences[i]);
    std::string w;
    while (words >> w) {
      auto a = w.find('/');
      auto b = w.rfind('/');
      std::string surface = w.substr(0, a);
      std::string lemma = a == b ? surface : w.substr(a + 1, b - a - 1);
      if (a == b) {
        for (auto& ch : lemma) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
      out << surface << "\t" << lemma << "\t" << w.substr(b + 1) << "\n";
    }
  }
  return out.str();
}

struct PleonasticFixture {
  anaforo::Document doc;
  std::vector<std::vector<int>> expected;  // per sentence
};

inline PleonasticFixture pleonastic_fixture() {
  std::ifstream in(fixture_path("pleonastic_it.txt"));
  std::vector<std::string> sentences;
  PleonasticFixture f;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    std::istringstream idx(line.substr(0, bar));
    std::vector<int> want;
    std::string t;
    while (idx >> t) {
      if (t != "-") want.push_back(std::stoi(t));
    }
    f.expected.push_back(want);
    sentences.push_back(line.substr(bar + 1));
  }
  f.doc = doc(tagged(sentences), anaforo::Lang::EN);
  return f;
}

}  // namespace testing

#endif  // ANAFORO_TESTS_HELPERS_HPP_
