#ifndef ANAFORO_PLEONASTIC_HPP_
#define ANAFORO_PLEONASTIC_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "anaforo/corpus.hpp"

namespace anaforo {

// Patterns for non-referential "it". File format:
//   define NAME = ITEM | ITEM ...     ITEM: {lemma lemma} or <CATEGORY>
//   window N                          longest allowed match after "it"
//   pattern ELEM ELEM ...             ELEM: NAME | {..} | <..>, then ?, * or +
// A pattern matches contiguous tokens starting at the "it" token, and its
// first element must match that token.
class PleonasticPatterns {
 public:
  struct Item {
    std::vector<std::string> lemmas;  // empty when `pos` is set
    std::optional<Pos> pos;
    bool matches(const Token& t) const;
  };
  struct Element {
    std::vector<Item> items;
    char quantifier = 0;
  };
  struct Pattern {
    std::vector<Element> elements;
    int line = 0;
  };

  static PleonasticPatterns parse(std::istream& in,
                                  const std::string& source = "<patterns>");
  static PleonasticPatterns load(const std::string& path);

  // Indices of pleonastic "it" tokens in the sentence.
  std::vector<int> detect(const Sentence& sentence) const;
  bool matches_at(const Sentence& sentence, int index) const;

  int window() const { return window_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }

 private:
  std::vector<Pattern> patterns_;
  int window_ = 6;
};

}  // namespace anaforo

#endif  // ANAFORO_PLEONASTIC_HPP_
