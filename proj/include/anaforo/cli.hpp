#ifndef ANAFORO_CLI_HPP_
#define ANAFORO_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "anaforo/generator.hpp"
#include "anaforo/pipeline.hpp"

namespace anaforo::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Command {
  Chunk,
  DetectZero,
  Resolve,
  Interlingua,
  Translate,
  Evaluate,
  Compare,
};
std::string_view to_string(Command c);

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kBelowThreshold = 3;

struct RunConfig {
  std::optional<Direction> lang_pair;
  std::optional<Lang> lang;  // for tagged text without a lang header
  std::string data_dir;      // default root for the files below
  ResourcePaths resources;
  std::string dictionary;
  std::string rules;
  std::string prefs;
  std::string weights;
  std::string algorithm = "agir";
  std::vector<std::string> algorithms;  // compare
  bool semantics = true;
  int window = 4;
  bool drop_subjects = false;
  std::vector<std::string> inputs;  // "-" reads stdin
  std::vector<std::string> golds;   // one per input document
  std::string out;                  // empty or "-" writes to `out`
  std::string format = "text";      // evaluate, compare: text or json
  std::optional<double> min_precision;  // percent
  int jobs = 1;

  // Fills every empty path from `data_dir`.
  void resolve_paths();
};

// Data directory used when no --data flag is given: $ANAFORO_DATA, else
// the build-time default.
std::string default_data_dir();

// Runs one subcommand. Errors are reported on `err` and mapped to the exit
// statuses above.
int run(Command command, const RunConfig& config, std::ostream& out,
        std::ostream& err);

// Parses a command line (argv[0] included) and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anaforo::cli

#endif  // ANAFORO_CLI_HPP_
