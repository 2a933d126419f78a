#include "anaforo/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "anaforo/error.hpp"
#include "anaforo/text.hpp"

namespace anaforo {

std::string_view to_string(BaselineId id) {
  switch (id) {
    case BaselineId::Proximity: return "proximity";
    case BaselineId::LinearSearch: return "linear";
    case BaselineId::Salience: return "salience";
    case BaselineId::Centering: return "centering";
  }
  return "?";
}

BaselineId baseline_from_string(std::string_view s) {
  std::string k = text::fold_case(s);
  if (k == "proximity") return BaselineId::Proximity;
  if (k == "linear" || k == "linear_search") return BaselineId::LinearSearch;
  if (k == "salience") return BaselineId::Salience;
  if (k == "centering") return BaselineId::Centering;
  throw ConfigError("unknown algorithm '" + std::string(s) + "'");
}

SalienceWeights SalienceWeights::parse(std::istream& in,
                                       const std::string& source) {
  SalienceWeights w;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto t = text::trim(line);
    auto hash = t.find('#');
    if (hash != std::string_view::npos) t = text::trim(t.substr(0, hash));
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, ln, "expected name = value");
    std::string name(text::trim(t.substr(0, eq)));
    std::string value(text::trim(t.substr(eq + 1)));
    double v = 0;
    std::istringstream vs(value);
    if (!(vs >> v) || !(vs >> std::ws).eof() || !std::isfinite(v)) {
      throw ParseError(source, ln, "bad weight '" + value + "'");
    }
    if (name == "recency") w.recency = v;
    else if (name == "subject") w.subject = v;
    else if (name == "head") w.head = v;
    else if (name == "non_embedded") w.non_embedded = v;
    else if (name == "parallelism") w.parallelism = v;
    else throw ParseError(source, ln, "unknown weight '" + name + "'");
  }
  return w;
}

SalienceWeights SalienceWeights::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open weights file " + path);
  return parse(in, path);
}

double salience_score(const Candidate& c, const SalienceWeights& w) {
  double s = w.recency;
  if (c.function == GramFunction::Subject) s += w.subject;
  if (!c.in_pp) s += w.head;
  if (c.top_level) s += w.non_embedded;
  if (c.same_function) s += w.parallelism;
  return std::ldexp(s, -c.distance);
}

std::vector<Candidate> order_proximity(const std::vector<Candidate>& cands) {
  std::vector<Candidate> out = cands;
  std::stable_sort(out.begin(), out.end(), closer);
  return out;
}

std::vector<Candidate> order_linear(const Anaphor& anaphor,
                                    const std::vector<Candidate>& cands) {
  std::vector<Candidate> out = cands;
  auto key = [&](const Candidate& c) {
    // Own sentence right to left first, then earlier sentences from the
    // nearest, each left to right.
    bool own = c.sentence == anaphor.sentence;
    return std::make_tuple(own ? 0 : 1, anaphor.sentence - c.sentence,
                           own ? -c.span.begin : c.span.begin, c.span.end,
                           c.marker);
  };
  std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    return key(a) < key(b);
  });
  return out;
}

std::vector<Candidate> order_salience(const std::vector<Candidate>& cands,
                                      const SalienceWeights& w) {
  std::vector<Candidate> out = order_proximity(cands);
  std::vector<std::pair<double, std::size_t>> scored;
  for (std::size_t i = 0; i < out.size(); ++i) {
    scored.emplace_back(salience_score(out[i], w), i);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first > b.first;
  });
  std::vector<Candidate> ranked;
  for (const auto& [score, i] : scored) ranked.push_back(out[i]);
  return ranked;
}

namespace {

int function_rank(GramFunction f) {
  switch (f) {
    case GramFunction::Subject: return 0;
    case GramFunction::Complement: return 1;
    default: return 2;
  }
}

// Previous utterance first, then the current one, then older ones.
int utterance_rank(int distance) {
  if (distance == 1) return 0;
  if (distance == 0) return 1;
  return distance;
}

}  // namespace

std::vector<Candidate> order_centering(const std::vector<Candidate>& cands) {
  std::vector<Candidate> out = order_proximity(cands);
  auto key = [](const Candidate& c) {
    bool given = c.repetition > 1;
    return std::make_tuple(utterance_rank(c.distance), given ? 0 : 1,
                           function_rank(c.function));
  };
  std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    return key(a) < key(b);
  });
  return out;
}

std::vector<Resolution> resolve_baseline(BaselineId id, const Analysis& a,
                                         const BaselineConfig& config,
                                         const ConstraintFilter& filter) {
  return resolve_with(
      a, config.resolver, filter,
      [&](const Analysis&, const Anaphor& an, const std::vector<Candidate>& passed,
          std::vector<std::string>*) {
        std::vector<Candidate> ranked;
        switch (id) {
          case BaselineId::Proximity: ranked = order_proximity(passed); break;
          case BaselineId::LinearSearch: ranked = order_linear(an, passed); break;
          case BaselineId::Salience: ranked = order_salience(passed, config.weights); break;
          case BaselineId::Centering: ranked = order_centering(passed); break;
        }
        return ranked;
      });
}

std::vector<Resolution> run_algorithm(std::string_view name, const Analysis& a,
                                      const BaselineConfig& config,
                                      const ConstraintFilter& filter) {
  if (text::fold_case(name) == "agir") {
    return resolve_document(a, config.resolver, filter);
  }
  return resolve_baseline(baseline_from_string(name), a, config, filter);
}

}  // namespace anaforo
