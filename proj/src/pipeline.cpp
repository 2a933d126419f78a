#include "anaforo/pipeline.hpp"

namespace anaforo {

ResourcePaths ResourcePaths::in(const std::string& dir) {
  ResourcePaths p;
  p.grammar_es = dir + "/grammar_es.cfg";
  p.grammar_en = dir + "/grammar_en.cfg";
  p.impersonal = dir + "/impersonal_es.txt";
  p.patterns = dir + "/pleonastic.pat";
  p.lexicon = dir + "/lexicon.tsv";
  return p;
}

Resources load_resources(const ResourcePaths& paths) {
  Resources r;
  r.grammar_es = Grammar::load(paths.grammar_es);
  r.grammar_en = Grammar::load(paths.grammar_en);
  r.impersonal = ImpersonalList::load(paths.impersonal);
  r.patterns = PleonasticPatterns::load(paths.patterns);
  r.lexicon = load_lexicon_file(paths.lexicon);
  return r;
}

Analysis analyze(const Document& source, const Resources& res) {
  Analysis a;
  a.doc = apply_lexicon(source, res.lexicon);
  a.chunked = chunk_document(a.doc, res.grammar(a.doc.lang));
  if (a.doc.lang == Lang::ES) {
    a.zero = insert_zero_pronouns(a.doc, a.chunked, res.impersonal);
    a.pleonastic.assign(a.doc.sentences.size(), {});
  } else {
    for (const auto& s : a.doc.sentences) {
      a.pleonastic.push_back(res.patterns.detect(s));
    }
  }
  a.anaphors = detect_anaphors(a);
  return a;
}

}  // namespace anaforo
