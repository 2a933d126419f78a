#ifndef ANAFORO_BASELINES_HPP_
#define ANAFORO_BASELINES_HPP_

#include <istream>
#include <string>
#include <vector>

#include "anaforo/resolver.hpp"

namespace anaforo {

enum class BaselineId { Proximity, LinearSearch, Salience, Centering };
std::string_view to_string(BaselineId id);
// Accepts the CLI names: proximity, linear, salience, centering.
BaselineId baseline_from_string(std::string_view s);

struct SalienceWeights {
  double recency = 100;
  double subject = 80;
  double head = 80;
  double non_embedded = 50;
  double parallelism = 35;

  static SalienceWeights zero() { return {0, 0, 0, 0, 0}; }
  // `name = value` lines; unknown names are an error.
  static SalienceWeights parse(std::istream& in,
                               const std::string& source = "<weights>");
  static SalienceWeights load(const std::string& path);
};

// Score of one candidate; halves per sentence of distance.
double salience_score(const Candidate& c, const SalienceWeights& w);

struct BaselineConfig {
  ResolverConfig resolver;
  SalienceWeights weights;
};

// Orderings over constraint survivors. The first element is chosen.
std::vector<Candidate> order_proximity(const std::vector<Candidate>& cands);
std::vector<Candidate> order_linear(const Anaphor& anaphor,
                                    const std::vector<Candidate>& cands);
std::vector<Candidate> order_salience(const std::vector<Candidate>& cands,
                                      const SalienceWeights& w);
std::vector<Candidate> order_centering(const std::vector<Candidate>& cands);

std::vector<Resolution> resolve_baseline(BaselineId id, const Analysis& a,
                                         const BaselineConfig& config,
                                         const ConstraintFilter& filter = {});

// "agir" runs the resolver; other names go through baseline_from_string.
std::vector<Resolution> run_algorithm(std::string_view name, const Analysis& a,
                                      const BaselineConfig& config,
                                      const ConstraintFilter& filter = {});

}  // namespace anaforo

#endif  // ANAFORO_BASELINES_HPP_
