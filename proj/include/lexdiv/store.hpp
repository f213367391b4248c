#pragma once
// In-memory lexical store with read-optimised indexes.
//
// The `put_*` mutators insert records as given and keep the indexes in sync;
// they do not enforce cross-record invariants. Ingestion goes through
// `ingest::merge`, which does. `validate()` reports any invariant violation
// regardless of how the records got in.

#include "lexdiv/model.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lexdiv {

struct Violation {
    std::string invariant;
    std::vector<std::string> records;
    std::vector<std::string> provenance;
    std::string message;

    bool operator==(const Violation&) const = default;
};

// A relation attached to a sense, seen from that sense.
struct SenseLink {
    std::string kind;  // "cognate" or an intra-lingual kind label
    bool outgoing = true;
    Sense other;
    std::string provenance;
};

struct WordMatch {
    Sense sense;
    Concept concept_record;
    std::vector<SenseLink> relations;
};

struct LexicalisationEntry {
    LexicalizationStatus status = LexicalizationStatus::unknown;
    std::vector<std::string> lemmas;
    bool on_map = false;  // Unknown languages are flagged, not dropped
};

struct ConceptNode {
    std::string concept_id;
    std::size_t distance = 0;
    LexicalizationStatus status = LexicalizationStatus::unknown;
    std::vector<std::string> lemmas;
};

struct ConceptNeighborhood {
    std::string focus;
    std::string language;
    std::vector<ConceptNode> nodes;  // ordered by (distance, id)
    std::vector<ConceptRelation> edges;
};

struct DomainNode {
    std::string concept_id;
    std::optional<std::string> parent;
    std::size_t depth = 0;
    LexicalizationStatus status = LexicalizationStatus::unknown;
    std::vector<std::string> lemmas;
    std::vector<std::string> children;
};

struct DomainTree {
    std::string root;
    std::string language;
    std::vector<DomainNode> nodes;  // preorder, children by concept id

    std::size_t count(LexicalizationStatus status) const;
};

struct LanguageProfile {
    LanguageDescriptor language;
    std::size_t senses = 0;
    std::size_t distinct_lemmas = 0;
    std::size_t gaps = 0;
    std::size_t intra_relations = 0;
    std::size_t cognate_relations = 0;

    std::size_t relations() const { return intra_relations + cognate_relations; }
};

class Store {
public:
    using LangConcept = std::pair<std::string, std::string>;

    // Raw mutators.
    void put(LanguageDescriptor language);
    void put(Concept record);
    void put(ConceptRelation relation);
    void put(Sense sense);  // fills in id when empty
    void put(LexicalGap gap);
    void put(CrossLingualRelation relation);  // canonicalised on insert
    void put(IntraLingualRelation relation);
    void put(Provenance source);
    bool erase_gap(const std::string& language, const std::string& concept_id);

    // Record access.
    const std::map<std::string, LanguageDescriptor>& languages() const { return languages_; }
    const std::map<std::string, Concept>& concepts() const { return concepts_; }
    const std::set<ConceptRelation>& concept_relations() const { return concept_relations_; }
    const std::map<std::string, Sense>& senses() const { return senses_; }
    const std::map<LangConcept, LexicalGap>& gaps() const { return gaps_; }
    const std::set<CrossLingualRelation>& cognates() const { return cognates_; }
    const std::set<IntraLingualRelation>& intra_relations() const { return intra_; }
    const std::map<std::string, Provenance>& sources() const { return sources_; }

    const LanguageDescriptor* find_language(const std::string& code) const;
    const Concept* find_concept(const std::string& id) const;
    const Sense* find_sense(const std::string& id) const;
    const Sense* find_sense(const std::string& language, const std::string& lemma,
                            const std::string& concept_id) const;
    const Provenance* find_source(const std::string& id) const;
    const LexicalGap* find_gap(const std::string& language, const std::string& concept_id) const;

    // Sense ids for a (language, concept) pair, a concept, or a language.
    std::vector<std::string> senses_of(const std::string& language, const std::string& concept_id) const;
    std::vector<std::string> senses_of_concept(const std::string& concept_id) const;
    std::vector<std::string> senses_of_language(const std::string& language) const;
    // Sorted lemmas for a (language, concept) pair.
    std::vector<std::string> lemmas_of(const std::string& language, const std::string& concept_id) const;
    // Sense ids cognate with `sense_id`, in either stored direction.
    std::vector<std::string> cognates_of(const std::string& sense_id) const;
    // Concepts with an is-a edge pointing at `concept`.
    std::vector<std::string> is_a_children(const std::string& concept_id) const;

    // Queries. Throw lexdiv::Error on unknown ids.
    LexicalizationStatus status(const std::string& language, const std::string& concept_id) const;
    std::vector<WordMatch> lookup_word(const std::string& language, const std::string& lemma) const;
    std::map<std::string, LexicalisationEntry> concept_lexicalisations(const std::string& concept_id) const;
    ConceptNeighborhood neighborhood(const std::string& concept_id, const std::string& language,
                                     int depth,
                                     const std::vector<ConceptRelationKind>& kinds = all_concept_relation_kinds()) const;
    DomainTree domain_tree(const std::string& root, const std::string& language) const;
    LanguageProfile language_profile(const std::string& language) const;

    std::vector<Violation> validate() const;

    // Copy containing only records whose provenance is redistributable.
    // Languages and concepts carry no provenance and are always kept.
    Store redistributable_subset() const;

    bool operator==(const Store& other) const;

    Store() = default;
    Store(const Store& other);
    Store& operator=(const Store& other);
    Store(Store&&) noexcept = default;
    Store& operator=(Store&&) noexcept = default;

private:
    void require_language(const std::string& code) const;
    void require_concept(const std::string& id, const char* code = errc::unknown_concept) const;

    std::map<std::string, LanguageDescriptor> languages_;
    std::map<std::string, Concept> concepts_;
    std::set<ConceptRelation> concept_relations_;
    std::map<std::string, Sense> senses_;
    std::map<LangConcept, LexicalGap> gaps_;
    std::set<CrossLingualRelation> cognates_;
    std::set<IntraLingualRelation> intra_;
    std::map<std::string, Provenance> sources_;

    std::map<LangConcept, std::set<std::string>> senses_by_key_;
    std::map<std::pair<std::string, std::string>, std::set<std::string>> senses_by_lemma_;
    std::map<std::string, std::set<std::string>> senses_by_concept_;
    std::map<std::string, std::set<std::string>> senses_by_language_;
    std::map<std::string, std::set<std::string>> cognate_adj_;
    std::map<std::string, std::vector<const IntraLingualRelation*>> intra_adj_;
    std::map<std::string, std::vector<ConceptRelation>> relations_by_concept_;
};

// Binary snapshot of a store. The file starts with a magic tag and a format
// version; a mismatched version makes `load_snapshot` return nullopt.
inline constexpr std::uint32_t kSnapshotVersion = 1;
void save_snapshot(const Store& store, const std::filesystem::path& path);
std::optional<Store> load_snapshot(const std::filesystem::path& path);

}  // namespace lexdiv
