#pragma once
// Domain types shared by every lexdiv module.
//
// Two layers: a supra-lingual concept layer (Concept, ConceptRelation) and
// per-language lexicons (Sense, LexicalGap, IntraLingualRelation), bridged by
// cross-lingual cognate links between senses. All types are plain values.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexdiv {

// Error raised by query operations. `code()` is a stable machine-readable
// token ("unknown-language", "unknown-concept", ...) reused by the HTTP layer.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* unknown_language = "unknown-language";
inline constexpr const char* unknown_concept = "unknown-concept";
inline constexpr const char* unknown_root = "unknown-root";
inline constexpr const char* same_language = "same-language";
inline constexpr const char* no_lexicalisation = "no-lexicalisation";
inline constexpr const char* precondition = "precondition";
inline constexpr const char* invalid_argument = "invalid-argument";
inline constexpr const char* non_finite = "non-finite";
inline constexpr const char* io = "io";
inline constexpr const char* not_found = "not-found";
}  // namespace errc

enum class PartOfSpeech { noun, verb, adjective, adverb, other };

std::string_view to_string(PartOfSpeech pos);
std::optional<PartOfSpeech> parse_pos(std::string_view token);

struct LanguageDescriptor {
    std::string code;  // ISO 639-3
    std::string name;
    std::optional<std::string> phylum;
    std::optional<double> latitude;
    std::optional<double> longitude;

    bool operator==(const LanguageDescriptor&) const = default;
};

bool is_language_code(std::string_view code);

struct Concept {
    std::string id;
    std::string gloss;
    PartOfSpeech pos = PartOfSpeech::noun;
    std::optional<std::string> pwn30_id;
    // false for language-specific meanings not yet part of the shared layer
    bool interlingual = true;

    bool operator==(const Concept&) const = default;
};

enum class ConceptRelationKind { is_a, part_of, related, metonymy_related };

std::string_view to_string(ConceptRelationKind kind);
std::optional<ConceptRelationKind> parse_concept_relation_kind(std::string_view token);
std::vector<ConceptRelationKind> all_concept_relation_kinds();

struct ConceptRelation {
    std::string source;
    std::string target;
    ConceptRelationKind kind = ConceptRelationKind::is_a;

    auto operator<=>(const ConceptRelation&) const = default;
};

struct Sense {
    std::string id;
    std::string language;
    std::string lemma;  // NFC, trimmed
    std::string concept_id;
    std::string source;  // provenance reference

    bool operator==(const Sense&) const = default;
};

// Stable sense identifier derived from the (language, concept, lemma) key.
std::string make_sense_id(std::string_view language, std::string_view concept_id,
                          std::string_view lemma);

struct LexicalGap {
    std::string language;
    std::string concept_id;
    std::string source;

    auto operator<=>(const LexicalGap&) const = default;
};

// Intra-lingual relation kind. Labels outside the known set are kept
// verbatim as `other`.
struct IntraKind {
    enum Tag { antonym, derivation, metonym_of, homograph_of, other };
    Tag tag = other;
    std::string label;  // only meaningful for `other`

    static IntraKind parse(std::string_view token);
    std::string to_string() const;
    auto operator<=>(const IntraKind&) const = default;
};

struct IntraLingualRelation {
    IntraKind kind;
    std::string source;  // sense id
    std::string target;  // sense id
    std::string provenance;

    auto operator<=>(const IntraLingualRelation&) const = default;
};

// Symmetric cognate link, stored with source < target.
struct CrossLingualRelation {
    std::string source;
    std::string target;
    std::string provenance;

    static CrossLingualRelation canonical(std::string a, std::string b, std::string provenance);
    auto operator<=>(const CrossLingualRelation&) const = default;
};

struct Provenance {
    std::string source_id;
    std::string license;
    bool redistributable = false;

    bool operator==(const Provenance&) const = default;
};

enum class LexicalizationStatus { lexicalised, gap, unknown };

std::string_view to_string(LexicalizationStatus status);

// Lemma normalisation: valid UTF-8 in, NFC with surrounding Unicode
// whitespace trimmed out. Case is preserved. Returns nullopt on invalid UTF-8.
std::optional<std::string> normalize_lemma(std::string_view raw);

}  // namespace lexdiv
