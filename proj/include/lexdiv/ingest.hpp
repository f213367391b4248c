#pragma once
// TSV interchange parsing and batch merging.
//
// Formats (UTF-8, one tab between columns, `#` starts a comment line):
//   sources.tsv          source_id  license  redistributable(0|1)
//   languages.tsv        code  name  phylum  [lat  lon]
//   concepts.tsv         id  pos  gloss  [pwn30_id  [broader,...  [interlingual(0|1)]]]
//   concept_relations.tsv source  kind  target
//   senses.tsv           language  lemma  concept  source_id
//   gaps.tsv             language  concept  source_id
//   cognates.tsv         lang1 lemma1 concept1 lang2 lemma2 concept2 source_id
//   intra_relations.tsv  language lemma1 concept1 kind lemma2 concept2 source_id
//
// Parsers never throw on content: every non-blank, non-comment line is either
// returned as a record, rejected with a rule name, or noted as a conflict.

#include "lexdiv/model.hpp"
#include "lexdiv/store.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace lexdiv::ingest {

struct LineRef {
    std::string file;
    std::size_t line = 0;
    std::string raw;
};

struct Rejection {
    LineRef where;
    std::string rule;
    std::string detail;
    // false when the entry is a side effect of an already-counted line
    bool line_outcome = true;
};

struct Conflict {
    LineRef where;
    std::string record;
    std::string resolution;
    bool line_outcome = true;
};

struct IngestReport {
    std::map<std::string, std::size_t> accepted;  // per record type
    std::size_t accepted_lines = 0;
    std::vector<Rejection> rejected;
    std::vector<Conflict> conflicts;

    void append(const IngestReport& other);
    std::size_t accepted_total() const;
    // accepted + rejected + conflicted input lines
    std::size_t accounted_lines() const;
};

template <typename T>
struct Located {
    T record;
    LineRef where;
    bool derived = false;  // produced by another record's line
};

// Reference to a sense by its natural key, resolved at merge time.
struct SenseKey {
    std::string language;
    std::string lemma;
    std::string concept_id;

    auto operator<=>(const SenseKey&) const = default;
};

struct CognateRecord {
    SenseKey a;
    SenseKey b;
    std::string source;
};

struct IntraRecord {
    SenseKey from;
    IntraKind kind;
    SenseKey to;
    std::string source;
};

template <typename T>
struct Parsed {
    std::vector<Located<T>> records;
    IngestReport report;
};

struct ParsedConcepts {
    std::vector<Located<Concept>> concepts;
    std::vector<Located<ConceptRelation>> relations;
    IngestReport report;
};

Parsed<Provenance> parse_sources(std::istream& in, const std::string& file = "sources.tsv");
Parsed<LanguageDescriptor> parse_languages(std::istream& in, const std::string& file = "languages.tsv");
ParsedConcepts parse_concepts(std::istream& in, const std::string& file = "concepts.tsv");
Parsed<ConceptRelation> parse_concept_relations(std::istream& in,
                                                const std::string& file = "concept_relations.tsv");
Parsed<Sense> parse_senses(std::istream& in, const std::string& file = "senses.tsv");
Parsed<LexicalGap> parse_gaps(std::istream& in, const std::string& file = "gaps.tsv");
Parsed<CognateRecord> parse_cognates(std::istream& in, const std::string& file = "cognates.tsv");
Parsed<IntraRecord> parse_intra_relations(std::istream& in, const std::string& file = "intra_relations.tsv");

struct Batch {
    std::vector<Located<Provenance>> sources;
    std::vector<Located<LanguageDescriptor>> languages;
    std::vector<Located<Concept>> concepts;
    std::vector<Located<ConceptRelation>> concept_relations;
    std::vector<Located<Sense>> senses;
    std::vector<Located<LexicalGap>> gaps;
    std::vector<Located<CognateRecord>> cognates;
    std::vector<Located<IntraRecord>> intra_relations;
    IngestReport report;  // parser-level outcomes

    void add(Parsed<Provenance> p);
    void add(Parsed<LanguageDescriptor> p);
    void add(ParsedConcepts p);
    void add(Parsed<ConceptRelation> p);
    void add(Parsed<Sense> p);
    void add(Parsed<LexicalGap> p);
    void add(Parsed<CognateRecord> p);
    void add(Parsed<IntraRecord> p);
};

// Merges a parsed batch into `store`. Records referencing unknown languages,
// concepts, senses or sources are rejected; a gap for a (language, concept)
// that has a sense is discarded, whichever arrives first. The returned
// report includes the batch's parser-level outcomes.
IngestReport merge(const Batch& batch, Store& store);

// Multi-section stream: `#@ <section>` lines switch the active format, where
// section is one of the file stems above (e.g. `#@ senses`).
Batch parse_bundle(std::istream& in, const std::string& file = "bundle.tsv");

// Reads every known file present in `dir` into one batch.
Batch read_data_dir(const std::filesystem::path& dir);

struct LoadResult {
    Store store;
    IngestReport report;
    std::vector<Violation> violations;
    bool from_cache = false;

    bool clean() const { return report.rejected.empty() && violations.empty(); }
};

inline constexpr const char* kSnapshotFile = ".lexdiv-snapshot.bin";

// Builds a store from a data directory. With `use_cache`, a snapshot newer
// than every TSV file is loaded instead, and a fresh one written otherwise.
LoadResult load_data_dir(const std::filesystem::path& dir, bool use_cache = false);

}  // namespace lexdiv::ingest
