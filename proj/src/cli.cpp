#include "anaforo/cli.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "anaforo/artifact.hpp"
#include "anaforo/baselines.hpp"
#include "anaforo/error.hpp"
#include "anaforo/eval.hpp"
#include "anaforo/interlingua.hpp"
#include "anaforo/text.hpp"
#include "json.hpp"

namespace anaforo::cli {

using nlohmann::json;

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Chunk: return "chunk";
    case Command::DetectZero: return "detect-zero";
    case Command::Resolve: return "resolve";
    case Command::Interlingua: return "interlingua";
    case Command::Translate: return "translate";
    case Command::Evaluate: return "evaluate";
    case Command::Compare: return "compare";
  }
  return "?";
}

std::string default_data_dir() {
  if (const char* env = std::getenv("ANAFORO_DATA"); env && *env) return env;
  return ANAFORO_DEFAULT_DATA;
}

void RunConfig::resolve_paths() {
  if (data_dir.empty()) data_dir = default_data_dir();
  ResourcePaths d = ResourcePaths::in(data_dir);
  auto fill = [](std::string& p, const std::string& v) {
    if (p.empty()) p = v;
  };
  fill(resources.grammar_es, d.grammar_es);
  fill(resources.grammar_en, d.grammar_en);
  fill(resources.impersonal, d.impersonal);
  fill(resources.patterns, d.patterns);
  fill(resources.lexicon, d.lexicon);
  fill(dictionary, data_dir + "/dict.tsv");
  fill(rules, data_dir + "/rules.tsv");
  fill(prefs, data_dir + "/prefs.cfg");
  fill(weights, data_dir + "/salience.weights");
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything loaded once per run and shared read-only by the workers.
struct Engine {
  Resources resources;
  BilingualDictionary dictionary;
  RuleTable rules;
  BaselineConfig baseline;
  GeneratorConfig generator;
};

Engine load_engine(const RunConfig& c) {
  for (const auto& p : {c.resources.grammar_es, c.resources.grammar_en, c.resources.impersonal,
                        c.resources.patterns, c.resources.lexicon, c.dictionary, c.rules,
                        c.prefs, c.weights}) {
    if (!std::filesystem::exists(p)) throw ConfigError("missing data file " + p);
  }
  Engine e;
  e.resources = load_resources(c.resources);
  e.dictionary = load_dictionary_file(c.dictionary);
  e.rules = RuleTable::load(c.rules);
  e.baseline.resolver.semantics = c.semantics;
  e.baseline.resolver.window = c.window;
  e.baseline.resolver.orders = PreferenceOrders::load(c.prefs);
  e.baseline.weights = SalienceWeights::load(c.weights);
  e.generator.drop_spanish_subjects = c.drop_subjects;
  return e;
}

// One document of the input, with whatever stages an artifact carried.
struct Unit {
  std::string source;
  ArtifactDocument art;
  bool from_artifact = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Unit> read_inputs(const RunConfig& c) {
  std::vector<Unit> units;
  for (const auto& path : c.inputs) {
    std::string bytes = slurp(path);
    auto first = bytes.find_first_not_of(" \t\r\n");
    std::string source = path == "-" ? "<stdin>" : path;
    if (first != std::string::npos && bytes[first] == '{') {
      std::istringstream in(bytes);
      for (auto& d : read_artifact(in, source)) {
        Unit u;
        u.source = source;
        u.art = std::move(d);
        u.from_artifact = true;
        units.push_back(std::move(u));
      }
    } else {
      Unit u;
      u.source = source;
      std::istringstream in(bytes);
      u.art.doc = parse_document(in, c.lang, source);
      u.art.lines.assign(static_cast<int>(Stage::Translate) + 1, {});
      units.push_back(std::move(u));
    }
  }
  for (const auto& u : units) {
    if (c.lang_pair && direction_for(u.art.doc.lang) != *c.lang_pair) {
      throw DataError(u.source + ": document language " +
                      std::string(anaforo::to_string(u.art.doc.lang)) +
                      " does not match --lang-pair " +
                      std::string(anaforo::to_string(*c.lang_pair)));
    }
  }
  return units;
}

Stage target_stage(Command c) {
  switch (c) {
    case Command::Chunk: return Stage::Chunk;
    case Command::DetectZero: return Stage::DetectZero;
    case Command::Resolve: return Stage::Resolve;
    case Command::Interlingua: return Stage::Interlingua;
    default: return Stage::Translate;
  }
}

struct Processed {
  Analysis analysis;
  std::vector<Resolution> resolutions;
  std::optional<InterlinguaText> ir;
  std::vector<PronounTranslation> translations;
  std::vector<std::string> lines;
};

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// Earlier stages present in the artifact are copied verbatim; the target
// stage and everything after the first missing stage are recomputed.
Processed process(const Unit& u, Stage target, const Engine& e,
                  const std::string& algorithm) {
  Processed p;
  const ArtifactDocument& art = u.art;
  p.analysis = analyze(art.doc, e.resources);
  bool fresh = false;
  for (int s = 0; s <= static_cast<int>(target); ++s) {
    Stage stage = static_cast<Stage>(s);
    bool reuse = !fresh && stage < target && art.has(stage);
    if (stage == Stage::Document) {
      if (reuse) append(p.lines, art.lines[s]);
      else p.lines.push_back(document_record(art.doc));
      continue;
    }
    if (!reuse) fresh = true;
    switch (stage) {
      case Stage::Chunk:
        if (reuse) append(p.lines, art.lines[s]);
        else append(p.lines, chunk_records(p.analysis));
        break;
      case Stage::DetectZero:
        if (reuse) append(p.lines, art.lines[s]);
        else append(p.lines, detection_records(p.analysis));
        break;
      case Stage::Resolve:
        if (reuse) {
          append(p.lines, art.lines[s]);
          p.resolutions = resolutions_from_records(p.analysis, art.resolutions);
        } else {
          p.resolutions = run_algorithm(algorithm, p.analysis, e.baseline);
          append(p.lines, resolution_records(p.analysis, p.resolutions, algorithm));
        }
        break;
      case Stage::Interlingua:
        if (reuse && art.ir) {
          append(p.lines, art.lines[s]);
          p.ir = art.ir;
        } else {
          p.ir = build_interlingua(p.analysis, p.resolutions);
          p.lines.push_back(interlingua_record(*p.ir));
        }
        break;
      case Stage::Translate:
        p.translations = translate(*p.ir, e.dictionary, e.rules, e.generator);
        append(p.lines, translation_records(p.translations));
        break;
      case Stage::Document:
        break;
    }
  }
  return p;
}

// Runs `fn(i)` for every unit index on up to `jobs` threads. The first
// exception is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex m;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs && t < static_cast<int>(n); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::string pct_or_none(const std::optional<double>& v) {
  if (!v) return "NONE";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * *v);
  return buf;
}

json metric_json(const Metric& m) {
  json j;
  j["correct"] = m.correct;
  j["attempted"] = m.attempted;
  j["total"] = m.total_real;
  j["precision"] = m.precision_pct();
  j["recall"] = m.recall_pct();
  return j;
}

void metric_row(std::ostream& out, const std::string& label, const Metric& m) {
  out << "  " << std::left << std::setw(22) << label << std::right << std::setw(8)
      << m.correct << std::setw(10) << m.attempted << std::setw(7) << m.total_real
      << std::setw(8) << m.precision_pct() << std::setw(8) << m.recall_pct() << "\n";
}

void metric_header(std::ostream& out) {
  out << "  " << std::left << std::setw(22) << "" << std::right << std::setw(8)
      << "correct" << std::setw(10) << "attempted" << std::setw(7) << "total"
      << std::setw(8) << "P(%)" << std::setw(8) << "R(%)" << "\n";
}

struct GoldedUnit {
  const Unit* unit;
  GoldAnnotations gold;
};

std::vector<GoldedUnit> pair_gold(const std::vector<Unit>& units, const RunConfig& c) {
  if (c.golds.size() != units.size()) {
    throw UsageError("need one --gold file per input document (" +
                     std::to_string(units.size()) + " documents, " +
                     std::to_string(c.golds.size()) + " gold files)");
  }
  std::vector<GoldedUnit> out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!std::filesystem::exists(c.golds[i])) throw UsageError("cannot open gold " + c.golds[i]);
    out.push_back({&units[i], load_gold_file(c.golds[i], units[i].art.doc)});
  }
  return out;
}

int run_evaluate(const RunConfig& c, const Engine& e, const std::vector<Unit>& units,
                 std::ostream& out, std::ostream& err) {
  auto golded = pair_gold(units, c);
  std::vector<ResolutionScore> res(golded.size());
  std::vector<DetectionScore> det(golded.size());
  std::vector<Metric> tr(golded.size());
  std::vector<std::string> algos(golded.size());
  parallel_for(golded.size(), c.jobs, [&](std::size_t i) {
    const Unit& u = *golded[i].unit;
    const GoldAnnotations& gold = golded[i].gold;
    Analysis a = analyze(u.art.doc, e.resources);
    std::vector<Resolution> rs;
    if (u.art.has(Stage::Resolve)) {
      rs = resolutions_from_records(a, u.art.resolutions);
      algos[i] = u.art.algorithm;
    } else {
      rs = run_algorithm(c.algorithm, a, e.baseline);
      algos[i] = c.algorithm;
    }
    res[i] = score_resolutions(resolved_items(a, rs), gold, a.doc);
    det[i] = score_detection(a.zero.verbs, gold);
    std::vector<PronounTranslation> ts;
    if (u.art.has(Stage::Translate)) {
      ts = u.art.translations;
    } else {
      InterlinguaText ir = u.art.ir ? *u.art.ir : build_interlingua(a, rs);
      ts = translate(ir, e.dictionary, e.rules, e.generator);
    }
    std::vector<TranslationItem> items;
    for (const auto& t : ts) {
      auto loc = parse_locator(t.anaphor);
      if (loc) items.push_back({*loc, t.target});
    }
    tr[i] = score_translations(items, gold);
  });

  ResolutionScore rs_total;
  DetectionScore det_total;
  Metric tr_total;
  for (std::size_t i = 0; i < golded.size(); ++i) {
    rs_total += res[i];
    det_total += det[i];
    tr_total += tr[i];
  }
  std::string algo = algos.empty() ? c.algorithm : algos.front();
  for (const auto& a : algos) {
    if (a != algo) algo = "mixed";
  }

  if (c.format == "json") {
    json j;
    j["documents"] = golded.size();
    j["resolution"]["algorithm"] = algo;
    j["resolution"]["overall"] = metric_json(rs_total.overall);
    for (const auto& [k, m] : rs_total.by_kind) j["resolution"]["by_kind"][k] = metric_json(m);
    for (const auto& [k, m] : rs_total.by_function) j["resolution"]["by_function"][k] = metric_json(m);
    j["detection"]["overall"] = metric_json(det_total.overall);
    j["detection"]["cells"] = json::object();
    for (const auto& [k, m] : det_total.cells) j["detection"]["cells"][k] = metric_json(m);
    j["translation"] = metric_json(tr_total);
    out << j.dump(2) << "\n";
  } else {
    out << "documents: " << golded.size() << "\n";
    out << "resolution (" << algo << ")\n";
    metric_header(out);
    metric_row(out, "overall", rs_total.overall);
    for (const auto& [k, m] : rs_total.by_kind) metric_row(out, "kind " + k, m);
    for (const auto& [k, m] : rs_total.by_function) metric_row(out, "function " + k, m);
    if (!det_total.cells.empty()) {
      out << "subject detection (every finite verb counts as attempted)\n";
      metric_header(out);
      metric_row(out, "overall", det_total.overall);
      for (const auto& [k, m] : det_total.cells) metric_row(out, "person " + k, m);
    }
    out << "translation\n";
    metric_header(out);
    metric_row(out, "pronouns", tr_total);
  }
  if (c.min_precision) {
    auto p = rs_total.overall.precision();
    if (!p || 100.0 * *p < *c.min_precision) {
      err << "anaforo: resolution precision " << pct_or_none(p) << " is below "
          << *c.min_precision << "\n";
      return kBelowThreshold;
    }
  }
  return kOk;
}

int run_compare(const RunConfig& c, const Engine& e, const std::vector<Unit>& units,
                std::ostream& out, std::ostream& err) {
  auto golded = pair_gold(units, c);
  std::vector<std::string> algos = c.algorithms;
  if (algos.empty()) algos = {"agir", "proximity", "linear", "salience", "centering"};
  for (const auto& a : algos) {
    if (text::fold_case(a) != "agir") baseline_from_string(a);
  }
  std::vector<ComparisonInput> runs(algos.size());
  for (std::size_t k = 0; k < algos.size(); ++k) {
    runs[k].algorithm = algos[k];
    runs[k].documents.resize(golded.size());
  }
  parallel_for(golded.size(), c.jobs, [&](std::size_t i) {
    const Unit& u = *golded[i].unit;
    Analysis a = analyze(u.art.doc, e.resources);
    for (std::size_t k = 0; k < algos.size(); ++k) {
      auto rs = run_algorithm(algos[k], a, e.baseline);
      runs[k].documents[i] = score_resolutions(resolved_items(a, rs), golded[i].gold, a.doc);
    }
  });
  auto rows = compare(runs);
  if (c.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json jr = metric_json(r.score.overall);
      jr["algorithm"] = r.algorithm;
      jr["wins"] = r.wins;
      jr["losses"] = r.losses;
      j.push_back(std::move(jr));
    }
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(12) << "algorithm" << std::right << std::setw(8)
        << "correct" << std::setw(10) << "attempted" << std::setw(7) << "total"
        << std::setw(8) << "P(%)" << std::setw(8) << "R(%)" << std::setw(6) << "wins"
        << std::setw(8) << "losses" << "\n";
    for (const auto& r : rows) {
      const Metric& m = r.score.overall;
      out << std::left << std::setw(12) << r.algorithm << std::right << std::setw(8)
          << m.correct << std::setw(10) << m.attempted << std::setw(7) << m.total_real
          << std::setw(8) << m.precision_pct() << std::setw(8) << m.recall_pct()
          << std::setw(6) << r.wins << std::setw(8) << r.losses << "\n";
    }
    out << "baselines are adapted to partial parsing\n";
  }
  if (c.min_precision && !rows.empty()) {
    auto p = rows.front().score.overall.precision();
    if (!p || 100.0 * *p < *c.min_precision) {
      err << "anaforo: " << rows.front().algorithm << " precision " << pct_or_none(p)
          << " is below " << *c.min_precision << "\n";
      return kBelowThreshold;
    }
  }
  return kOk;
}

void write_sidecar(Command command, const RunConfig& c, const Engine& e) {
  json j;
  j["tool"] = "anaforo";
  j["version"] = kToolVersion;
  j["rules_version"] = e.rules.version();
  j["command"] = std::string(to_string(command));
  j["inputs"] = c.inputs;
  j["gold"] = c.golds;
  j["config"] = {{"algorithm", c.algorithm},
                 {"algorithms", c.algorithms},
                 {"semantics", c.semantics},
                 {"window", c.window},
                 {"drop_subjects", c.drop_subjects},
                 {"grammar_es", c.resources.grammar_es},
                 {"grammar_en", c.resources.grammar_en},
                 {"impersonal", c.resources.impersonal},
                 {"patterns", c.resources.patterns},
                 {"lexicon", c.resources.lexicon},
                 {"dictionary", c.dictionary},
                 {"rules", c.rules},
                 {"prefs", c.prefs},
                 {"weights", c.weights}};
  std::ofstream f(c.out + ".meta.json", std::ios::binary);
  f << j.dump(2) << "\n";
}

}  // namespace

int run(Command command, const RunConfig& config, std::ostream& out,
        std::ostream& err) {
  RunConfig c = config;
  try {
    if (c.inputs.empty()) throw UsageError("no input (--in)");
    if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (c.window < 0) throw UsageError("--window must not be negative");
    if (c.format != "text" && c.format != "json") throw UsageError("--format must be text or json");
    if ((command == Command::Evaluate || command == Command::Compare) && c.golds.empty()) {
      throw UsageError(std::string(to_string(command)) + " needs --gold");
    }
    c.resolve_paths();
    if (text::fold_case(c.algorithm) != "agir") baseline_from_string(c.algorithm);
    Engine engine = load_engine(c);
    std::vector<Unit> units = read_inputs(c);

    std::ofstream file;
    std::ostream* sink = &out;
    bool to_file = !c.out.empty() && c.out != "-";
    if (to_file) {
      file.open(c.out, std::ios::binary);
      if (!file) throw ConfigError("cannot write " + c.out);
      sink = &file;
    }

    int status = kOk;
    if (command == Command::Evaluate) {
      status = run_evaluate(c, engine, units, *sink, err);
    } else if (command == Command::Compare) {
      status = run_compare(c, engine, units, *sink, err);
    } else {
      Stage target = target_stage(command);
      std::vector<std::vector<std::string>> results(units.size());
      parallel_for(units.size(), c.jobs, [&](std::size_t i) {
        if (units[i].art.doc.token_count() == 0) return;
        results[i] = process(units[i], target, engine, c.algorithm).lines;
      });
      for (const auto& lines : results) {
        for (const auto& l : lines) *sink << l << "\n";
      }
    }
    sink->flush();
    if (to_file) write_sidecar(command, c, engine);
    return status;
  } catch (const UsageError& e) {
    err << "anaforo: usage: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "anaforo: " << e.kind() << " error: " << e.what() << "\n";
    return kDataError;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pronoun resolution and translation between Spanish and English"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print tool and rule-table versions");
  std::string version_rules;
  app.add_option("--rules", version_rules, "Rule table reported by --version");

  RunConfig c;
  std::string lang_pair, lang;
  bool no_semantics = false;
  double min_precision = -1;

  auto common = [&](CLI::App* sub, bool many_algos) {
    sub->add_option("--in", c.inputs, "Tagged text or artifact (repeatable, - for stdin)");
    sub->add_option("--out", c.out, "Output file (default stdout); writes <out>.meta.json");
    sub->add_option("--lang-pair", lang_pair, "ES-EN or EN-ES");
    sub->add_option("--lang", lang, "Language of tagged input without a header");
    sub->add_option("--data", c.data_dir, "Data directory (default $ANAFORO_DATA)");
    sub->add_option("--grammar-es", c.resources.grammar_es);
    sub->add_option("--grammar-en", c.resources.grammar_en);
    sub->add_option("--impersonal", c.resources.impersonal);
    sub->add_option("--patterns", c.resources.patterns, "Pleonastic pattern file");
    sub->add_option("--lexicon", c.resources.lexicon);
    sub->add_option("--dict", c.dictionary, "Bilingual dictionary");
    sub->add_option("--rules", c.rules, "Pronoun rule table");
    sub->add_option("--prefs", c.prefs, "Preference orders");
    sub->add_option("--weights", c.weights, "Salience weights");
    if (many_algos) {
      sub->add_option("--algo", c.algorithms, "Comma-separated algorithms")->delimiter(',');
    } else {
      sub->add_option("--algo", c.algorithm, "agir|proximity|linear|salience|centering");
    }
    sub->add_flag("--no-semantics", no_semantics, "Disable semantic constraints");
    sub->add_option("--window", c.window, "Candidate window in sentences");
    sub->add_flag("--drop-subjects", c.drop_subjects, "Emit ∅ for Spanish subject pronouns");
    sub->add_option("--jobs", c.jobs, "Documents processed in parallel");
  };

  std::vector<std::pair<CLI::App*, Command>> subs;
  for (Command cmd : {Command::Chunk, Command::DetectZero, Command::Resolve,
                      Command::Interlingua, Command::Translate, Command::Evaluate,
                      Command::Compare}) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(cmd)));
    common(sub, cmd == Command::Compare);
    if (cmd == Command::Evaluate || cmd == Command::Compare) {
      sub->add_option("--gold", c.golds, "Gold annotation file per document (repeatable)");
      sub->add_option("--format", c.format, "text or json");
      sub->add_option("--min-precision", min_precision,
                      "Fail with status 3 below this precision (percent)");
    }
    subs.emplace_back(sub, cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "anaforo: usage: " << e.what() << "\n";
    return kUsageError;
  }

  if (version) {
    RunConfig vc;
    vc.rules = version_rules;
    vc.resolve_paths();
    std::string rules_version = "unavailable";
    try {
      rules_version = RuleTable::load(vc.rules).version();
    } catch (const Error&) {
    }
    out << "anaforo " << kToolVersion << "\nrule table " << rules_version << " ("
        << vc.rules << ")\n";
    return kOk;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    try {
      if (!lang_pair.empty()) c.lang_pair = direction_from_string(lang_pair);
      if (!lang.empty()) {
        std::string up = lang;
        for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        c.lang = lang_from_string(up);
      }
    } catch (const Error& e) {
      err << "anaforo: usage: " << e.what() << "\n";
      return kUsageError;
    }
    c.semantics = !no_semantics;
    if (min_precision >= 0) c.min_precision = min_precision;
    return run(cmd, c, out, err);
  }
  out << app.help();
  return kUsageError;
}

}  // namespace anaforo::cli
