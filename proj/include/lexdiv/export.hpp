#pragma once
// Catalogue exports. Every export first drops records whose provenance is not
// redistributable.
//
// Single-lexicon LMF profile:
//
//   LexicalResource
//     Lexicon id=<code> language=<code> label=<name> [ld:phylum ld:latitude ld:longitude]
//       ld:Source id license redistributable          (sources used below)
//       LexicalEntry id=<code>:<lemma>                (sorted by id)
//         Lemma writtenForm
//         Sense id conceptRef ld:source
//           SenseRelation relType target ld:source    (intra-lingual relations)
//       ld:GapList
//         ld:Gap conceptRef ld:source
//       ld:ConceptList
//         ld:Concept id partOfSpeech gloss [pwn30] interlingual
//         ld:ConceptRelation source relType target
//
// `ld` is bound to urn:lexdiv:lmf-extension; everything under it is outside
// the LMF core model.

#include "lexdiv/analytics.hpp"
#include "lexdiv/ingest.hpp"
#include "lexdiv/store.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexdiv::exports {

enum class RawKind { gaps, cognates, similarity, clusters };
std::optional<RawKind> parse_raw_kind(std::string_view token);

enum class LexiconFormat { lmf_xml, tsv };
std::optional<LexiconFormat> parse_lexicon_format(std::string_view token);

inline constexpr const char* kLmfExtensionNamespace = "urn:lexdiv:lmf-extension";

// Writes one dataset; returns the number of data rows written.
//   gaps, cognates: the ingest TSV formats
//   similarity:     lang_a  lang_b  score  overlap  cognate_overlap
//   clusters:       concept  cluster  language  lemma
std::size_t export_raw(const Store& store, RawKind kind, std::ostream& sink,
                       std::size_t min_overlap = analytics::kDefaultMinOverlap);

struct LexiconSummary {
    std::size_t entries = 0;  // distinct lemmas
    std::size_t senses = 0;
    std::size_t gaps = 0;
    std::size_t relations = 0;
};

// TSV output is a multi-section bundle readable by ingest::parse_bundle.
LexiconSummary export_lexicon(const Store& store, const std::string& language, LexiconFormat format,
                              std::ostream& sink);

// Header `concept_id<TAB>code1<TAB>code2...`, one row per concept that is
// lexicalised or gapped in at least one requested language, sorted by id.
// Cells: lemmas joined by '|', `GAP`, or empty for unknown. Returns row count.
std::size_t export_lexicon_set(const Store& store, const std::vector<std::string>& languages, std::ostream& sink);

// Reads a single-lexicon LMF document written by export_lexicon.
ingest::Batch parse_lmf(std::istream& in, const std::string& file = "lexicon.xml");

}  // namespace lexdiv::exports
