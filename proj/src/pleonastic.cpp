#include "anaforo/pleonastic.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "anaforo/error.hpp"
#include "anaforo/text.hpp"

namespace anaforo {

bool PleonasticPatterns::Item::matches(const Token& t) const {
  if (pos) return t.pos == *pos;
  std::string lemma = text::fold_case(t.lemma);
  return std::find(lemmas.begin(), lemmas.end(), lemma) != lemmas.end();
}

namespace {

class PatternParser {
 public:
  explicit PatternParser(const std::string& source) : source_(source) {}

  [[noreturn]] void fail(int ln, const std::string& msg) {
    throw ParseError(source_, ln, msg);
  }

  // Splits into items: {..} groups, <..> groups and bare words.
  std::vector<std::string> tokenize(std::string_view s, int ln) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] == ' ' || s[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      if (s[i] == '{' || s[i] == '<') {
        char close = s[i] == '{' ? '}' : '>';
        j = s.find(close, i);
        if (j == std::string_view::npos) fail(ln, "unterminated group");
        ++j;
      }
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      out.emplace_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  }

  PleonasticPatterns::Item parse_item(std::string_view w, int ln) {
    PleonasticPatterns::Item item;
    if (w.size() >= 2 && w.front() == '{' && w.back() == '}') {
      for (auto l : text::split_ws(w.substr(1, w.size() - 2))) {
        item.lemmas.push_back(text::fold_case(l));
      }
      if (item.lemmas.empty()) fail(ln, "empty lemma set");
    } else if (w.size() >= 2 && w.front() == '<' && w.back() == '>') {
      try {
        item.pos = pos_from_string(w.substr(1, w.size() - 2));
      } catch (const Error& e) {
        fail(ln, e.what());
      }
    } else {
      fail(ln, "expected {lemmas} or <CATEGORY>, got '" + std::string(w) + "'");
    }
    return item;
  }

  std::vector<PleonasticPatterns::Item> parse_ref(std::string_view w, int ln) {
    if (w.front() == '{' || w.front() == '<') return {parse_item(w, ln)};
    auto it = defines_.find(std::string(w));
    if (it == defines_.end()) fail(ln, "undefined name '" + std::string(w) + "'");
    return it->second;
  }

  void define(std::string_view body, int ln) {
    auto eq = body.find('=');
    if (eq == std::string_view::npos) fail(ln, "define without '='");
    std::string name(text::trim(body.substr(0, eq)));
    if (name.empty()) fail(ln, "define without a name");
    if (defines_.count(name)) fail(ln, "'" + name + "' defined twice");
    std::vector<PleonasticPatterns::Item> items;
    bool expect_item = true;
    for (const auto& w : tokenize(body.substr(eq + 1), ln)) {
      if (w == "|") {
        if (expect_item) fail(ln, "misplaced '|'");
        expect_item = true;
        continue;
      }
      if (!expect_item) fail(ln, "missing '|' between alternatives");
      auto sub = parse_ref(w, ln);
      items.insert(items.end(), sub.begin(), sub.end());
      expect_item = false;
    }
    if (items.empty() || expect_item) fail(ln, "empty definition");
    defines_[name] = std::move(items);
  }

  PleonasticPatterns::Pattern pattern(std::string_view body, int ln) {
    PleonasticPatterns::Pattern p;
    p.line = ln;
    for (auto w : tokenize(body, ln)) {
      PleonasticPatterns::Element el;
      std::string_view ref = w;
      char last = ref.back();
      if (ref.size() > 1 && (last == '?' || last == '*' || last == '+')) {
        el.quantifier = last;
        ref.remove_suffix(1);
      }
      el.items = parse_ref(ref, ln);
      p.elements.push_back(std::move(el));
    }
    if (p.elements.empty()) fail(ln, "empty pattern");
    if (p.elements.front().quantifier != 0) {
      fail(ln, "the first element must match exactly one token");
    }
    return p;
  }

 private:
  std::string source_;
  std::map<std::string, std::vector<PleonasticPatterns::Item>> defines_;
};

bool element_matches(const PleonasticPatterns::Element& el, const Token& t) {
  for (const auto& item : el.items) {
    if (item.matches(t)) return true;
  }
  return false;
}

bool match_from(const PleonasticPatterns::Pattern& p, std::size_t ei,
                const std::vector<Token>& toks, int pos, int limit) {
  if (ei == p.elements.size()) return true;
  const auto& el = p.elements[ei];
  bool many = el.quantifier == '*' || el.quantifier == '+';
  int min = (el.quantifier == 0 || el.quantifier == '+') ? 1 : 0;
  int max = many ? limit - pos : 1;
  int n = 0;
  while (n < max && pos + n < limit && element_matches(el, toks[pos + n])) ++n;
  for (int k = n; k >= min; --k) {
    if (match_from(p, ei + 1, toks, pos + k, limit)) return true;
  }
  return false;
}

}  // namespace

PleonasticPatterns PleonasticPatterns::parse(std::istream& in,
                                             const std::string& source) {
  PleonasticPatterns out;
  PatternParser parser(source);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto t = text::trim(line);
    auto hash = t.find('#');
    if (hash != std::string_view::npos) t = text::trim(t.substr(0, hash));
    if (t.empty()) continue;
    if (text::starts_with(t, "define ")) {
      parser.define(t.substr(7), ln);
    } else if (text::starts_with(t, "pattern ")) {
      out.patterns_.push_back(parser.pattern(t.substr(8), ln));
    } else if (text::starts_with(t, "window ")) {
      int w = text::parse_index(text::trim(t.substr(7)));
      if (w <= 0) parser.fail(ln, "window must be a positive integer");
      out.window_ = w;
    } else {
      parser.fail(ln, "expected define, window or pattern");
    }
  }
  return out;
}

PleonasticPatterns PleonasticPatterns::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pattern file " + path);
  return parse(in, path);
}

bool PleonasticPatterns::matches_at(const Sentence& sentence, int index) const {
  const auto& toks = sentence.tokens;
  int limit = std::min<int>(toks.size(), index + 1 + window_);
  for (const auto& p : patterns_) {
    if (!element_matches(p.elements.front(), toks[index])) continue;
    if (match_from(p, 1, toks, index + 1, limit)) return true;
  }
  return false;
}

std::vector<int> PleonasticPatterns::detect(const Sentence& sentence) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(sentence.tokens.size()); ++i) {
    if (matches_at(sentence, i)) out.push_back(i);
  }
  return out;
}

}  // namespace anaforo
