#ifndef ANAFORO_ARTIFACT_HPP_
#define ANAFORO_ARTIFACT_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "anaforo/generator.hpp"
#include "anaforo/interlingua.hpp"
#include "anaforo/resolver.hpp"

namespace anaforo {

// JSON-lines artifacts. Each document starts with a "document" record that
// embeds the tagged text; later records carry a "rec" field naming the
// stage that produced them.
enum class Stage { Document, Chunk, DetectZero, Resolve, Interlingua, Translate };
std::string_view to_string(Stage s);
// Record type name -> stage; throws DataError on unknown names.
Stage stage_of_record(std::string_view rec);

std::string document_record(const Document& source);
std::vector<std::string> chunk_records(const Analysis& a);
std::vector<std::string> detection_records(const Analysis& a);
std::vector<std::string> resolution_records(const Analysis& a,
                                            const std::vector<Resolution>& rs,
                                            std::string_view algorithm);
std::string interlingua_record(const InterlinguaText& ir);
std::vector<std::string> translation_records(
    const std::vector<PronounTranslation>& ts);

struct ResolutionRecord {
  std::string anaphor;
  std::optional<int> chosen;
  std::vector<int> ranked;
  std::vector<std::string> fired;
  std::string reason;
  int chain = kNoMarker;
};

struct ArtifactDocument {
  Document doc;
  // Verbatim lines per stage, indexed by Stage.
  std::vector<std::vector<std::string>> lines;
  std::string algorithm;  // from the resolution records
  std::vector<ResolutionRecord> resolutions;
  std::optional<InterlinguaText> ir;
  std::vector<PronounTranslation> translations;

  bool has(Stage s) const { return !lines[static_cast<int>(s)].empty(); }
};

// Throws ParseError with the line number on malformed input.
std::vector<ArtifactDocument> read_artifact(std::istream& in,
                                            const std::string& source);

// Matches records to the analysis anaphors; throws DataError on mismatch.
std::vector<Resolution> resolutions_from_records(
    const Analysis& a, const std::vector<ResolutionRecord>& records);

}  // namespace anaforo

#endif  // ANAFORO_ARTIFACT_HPP_
