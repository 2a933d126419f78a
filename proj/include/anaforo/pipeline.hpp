#ifndef ANAFORO_PIPELINE_HPP_
#define ANAFORO_PIPELINE_HPP_

#include <string>

#include "anaforo/chunker.hpp"
#include "anaforo/corpus.hpp"
#include "anaforo/pleonastic.hpp"
#include "anaforo/resolver.hpp"
#include "anaforo/zero_pronoun.hpp"

namespace anaforo {

// Language resources shared by every document of a run. Immutable once
// loaded.
struct Resources {
  Grammar grammar_es;
  Grammar grammar_en;
  ImpersonalList impersonal;
  PleonasticPatterns patterns;
  SemanticLexicon lexicon;

  const Grammar& grammar(Lang lang) const {
    return lang == Lang::ES ? grammar_es : grammar_en;
  }
};

struct ResourcePaths {
  std::string grammar_es;
  std::string grammar_en;
  std::string impersonal;
  std::string patterns;
  std::string lexicon;

  // Default file names inside a data directory.
  static ResourcePaths in(const std::string& dir);
};

Resources load_resources(const ResourcePaths& paths);

// Lexicon, chunking, zero pronouns (ES), pleonastic "it" (EN) and anaphor
// detection. Resolution is left to the caller.
Analysis analyze(const Document& source, const Resources& res);

}  // namespace anaforo

#endif  // ANAFORO_PIPELINE_HPP_
