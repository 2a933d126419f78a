#include "anaforo/eval.hpp"

#include <algorithm>
#include <set>

#include "anaforo/error.hpp"
#include "anaforo/text.hpp"

namespace anaforo {

std::optional<double> Metric::precision() const {
  if (attempted == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(attempted);
}

std::optional<double> Metric::recall() const {
  if (total_real == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(total_real);
}

std::string Metric::precision_pct() const { return text::percent(correct, attempted); }
std::string Metric::recall_pct() const { return text::percent(correct, total_real); }

Metric& Metric::operator+=(const Metric& o) {
  correct += o.correct;
  attempted += o.attempted;
  total_real += o.total_real;
  return *this;
}

std::vector<ResolvedItem> resolved_items(const Analysis& a,
                                         const std::vector<Resolution>& rs) {
  std::vector<ResolvedItem> out;
  for (const auto& r : rs) {
    const Anaphor& an = a.anaphors[r.anaphor];
    ResolvedItem item;
    item.anaphor = an.locator();
    item.kind = an.kind;
    item.function = an.function;
    item.reason = r.reason;
    if (r.chosen) {
      int s = 0;
      if (const SlotStructure* np = a.find_np(*r.chosen, &s)) {
        item.antecedent = Locator{s, false, np->span.begin, np->span.end};
        item.head = np->head;
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

ResolutionScore& ResolutionScore::operator+=(const ResolutionScore& o) {
  overall += o.overall;
  for (const auto& [k, m] : o.by_kind) by_kind[k] += m;
  for (const auto& [k, m] : o.by_function) by_function[k] += m;
  outcomes.insert(outcomes.end(), o.outcomes.begin(), o.outcomes.end());
  return *this;
}

namespace {

bool same_slot(const Locator& a, const Locator& b) {
  return a.sentence == b.sentence && a.zero == b.zero && a.begin == b.begin;
}

bool covers(const Locator& span, int sentence, int token) {
  return !span.zero && span.sentence == sentence && token >= span.begin &&
         token < span.end;
}

}  // namespace

ResolutionScore score_resolutions(const std::vector<ResolvedItem>& items,
                                  const GoldAnnotations& gold,
                                  const Document& doc) {
  std::map<int, std::vector<Locator>> chain_spans;
  for (const auto& m : gold.mentions) chain_spans[m.chain].push_back(m.span);
  for (const auto& r : gold.records) {
    if (r.antecedent) chain_spans[r.chain].push_back(*r.antecedent);
  }

  ResolutionScore score;
  for (const auto& r : gold.records) {
    bool found = std::any_of(items.begin(), items.end(), [&](const ResolvedItem& i) {
      return same_slot(i.anaphor, r.pronoun);
    });
    if (!found && !r.pronoun.zero) {
      const Token& t = doc.sentences[r.pronoun.sentence].tokens[r.pronoun.begin];
      if (t.pos != Pos::Pron) {
        throw DataError("gold pronoun " + r.pronoun.str() + " ('" + t.surface +
                        "') is not a pronoun in the document");
      }
    }
  }

  for (const auto& item : items) {
    const AnnotationRecord* g = gold.find(item.anaphor);
    std::string kind(to_string(item.kind));
    std::string function(to_string(item.function));
    Metric m;
    bool scored = true;
    if (g) {
      if (g->taxonomy() != Taxonomy::Anaphoric) scored = false;
      else m.total_real = 1;
    }
    Outcome out{item.anaphor, false, false};
    if (scored && item.antecedent) {
      m.attempted = 1;
      out.attempted = true;
      if (g) {
        const auto& spans = chain_spans[g->chain];
        bool ok = std::any_of(spans.begin(), spans.end(), [&](const Locator& sp) {
          return covers(sp, item.antecedent->sentence, item.head);
        });
        m.correct = ok ? 1 : 0;
        out.correct = ok;
      }
    }
    score.overall += m;
    score.by_kind[kind] += m;
    score.by_function[function] += m;
    score.outcomes.push_back(out);
  }
  // Gold anaphors the system never detected still count as real.
  for (const auto& r : gold.records) {
    if (r.taxonomy() != Taxonomy::Anaphoric) continue;
    bool found = std::any_of(items.begin(), items.end(), [&](const ResolvedItem& i) {
      return same_slot(i.anaphor, r.pronoun);
    });
    if (!found) score.overall.total_real += 1;
  }
  return score;
}

DetectionScore& DetectionScore::operator+=(const DetectionScore& o) {
  overall += o.overall;
  for (const auto& [k, m] : o.cells) cells[k] += m;
  return *this;
}

DetectionScore score_detection(const std::vector<VerbReport>& statuses,
                               const GoldAnnotations& gold) {
  DetectionScore score;
  for (const auto& g : gold.verbs) {
    auto it = std::find_if(statuses.begin(), statuses.end(), [&](const VerbReport& v) {
      return v.sentence == g.sentence && v.verb == g.token;
    });
    Metric m;
    m.total_real = 1;
    std::string person = "?";
    if (it != statuses.end()) {
      m.attempted = 1;
      m.correct = it->status == g.status ? 1 : 0;
      if (it->person != kUnknownPerson) person = std::to_string(it->person);
    }
    std::string cell = person + (g.status == SubjectKind::Omitted ? " omitted" : " present");
    score.overall += m;
    score.cells[cell] += m;
  }
  return score;
}

Metric score_translations(const std::vector<TranslationItem>& translations,
                          const GoldAnnotations& gold) {
  Metric m;
  for (const auto& r : gold.records) {
    if (!r.target) continue;
    ++m.total_real;
    for (const auto& t : translations) {
      if (!same_slot(t.anaphor, r.pronoun)) continue;
      ++m.attempted;
      if (text::fold_case(t.target) == text::fold_case(*r.target)) ++m.correct;
      break;
    }
  }
  return m;
}

double kappa(const KappaInput& in) {
  if (in.a.empty()) throw Error("kappa: no items");
  if (in.a.size() != in.b.size()) throw Error("kappa: label lists differ in length");
  double n = static_cast<double>(in.a.size());
  std::map<std::string, double> ma, mb;
  double agree = 0;
  for (std::size_t i = 0; i < in.a.size(); ++i) {
    ma[in.a[i]] += 1;
    mb[in.b[i]] += 1;
    if (in.a[i] == in.b[i]) agree += 1;
  }
  double po = agree / n;
  if (po == 1.0) return 1.0;
  double pe = 0;
  for (const auto& [label, count] : ma) {
    auto it = mb.find(label);
    if (it != mb.end()) pe += (count / n) * (it->second / n);
  }
  return (po - pe) / (1.0 - pe);
}

KappaInput kappa_items(const GoldAnnotations& a, const GoldAnnotations& b) {
  KappaInput out;
  for (const auto& ra : a.records) {
    const AnnotationRecord* rb = b.find(ra.pronoun);
    if (!rb) continue;
    auto label = [](const AnnotationRecord& r) {
      return r.antecedent ? r.antecedent->str() : std::string("exophoric");
    };
    out.a.push_back(label(ra));
    out.b.push_back(label(*rb));
  }
  return out;
}

std::vector<AlgorithmRow> compare(const std::vector<ComparisonInput>& runs) {
  std::vector<AlgorithmRow> rows;
  for (const auto& run : runs) {
    AlgorithmRow row;
    row.algorithm = run.algorithm;
    for (const auto& d : run.documents) row.score += d;
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j) continue;
      const auto& oi = rows[i].score.outcomes;
      const auto& oj = rows[j].score.outcomes;
      if (oi.size() != oj.size()) {
        throw DataError("compare: " + rows[i].algorithm + " and " +
                        rows[j].algorithm + " saw different anaphors");
      }
      for (std::size_t k = 0; k < oi.size(); ++k) {
        if (oi[k].correct && !oj[k].correct) ++rows[i].wins;
        if (!oi[k].correct && oj[k].correct) ++rows[i].losses;
      }
    }
  }
  return rows;
}

}  // namespace anaforo
